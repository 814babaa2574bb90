#include "nilknap/solve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "nilknap/symbolic.hpp"

namespace nilknap {
namespace {

/// Equation lhs - rhs = 0 compiled to variable indices with materialized
/// integer coefficients.
struct IndexedPoly {
    struct Mono {
        Integer coeff;
        std::vector<int> vars;  // repeated index = power
    };
    std::vector<Mono> monos;
    Integer constant;
    int max_var = -1;
};

IndexedPoly index_equation(const DiophEquation& eq, const std::map<std::string, int>& index_of) {
    IndexedPoly p;
    GeneralPoly diff = eq.difference();
    for (const auto& [mono, coeff] : diff.terms()) {
        if (mono.empty()) {
            p.constant += coeff.value();
            continue;
        }
        IndexedPoly::Mono m;
        m.coeff = coeff.value();
        for (const auto& v : mono) {
            auto it = index_of.find(v);
            if (it == index_of.end()) throw std::invalid_argument("undeclared variable: " + v);
            m.vars.push_back(it->second);
            p.max_var = std::max(p.max_var, it->second);
        }
        p.monos.push_back(std::move(m));
    }
    return p;
}

Integer eval_indexed(const IndexedPoly& p, const std::vector<Integer>& values) {
    Integer acc = p.constant;
    for (const auto& m : p.monos) {
        Integer t = m.coeff;
        for (int v : m.vars) t *= values[static_cast<std::size_t>(v)];
        acc += t;
    }
    return acc;
}

struct EnumerationProblem {
    std::vector<std::string> names;
    std::vector<std::pair<Integer, Integer>> bounds;
    std::vector<IndexedPoly> equations;
    std::vector<std::vector<std::size_t>> triggers;  // var index -> equations complete there
    std::vector<std::size_t> constant_equations;
};

EnumerationProblem build_problem(const std::vector<std::string>& names,
                                 const std::vector<DiophEquation>& equations,
                                 const SearchBox& box) {
    box.validate();
    if (box.size() != names.size())
        throw std::invalid_argument("search box dimension does not match variable count");
    EnumerationProblem prob;
    prob.names = names;
    prob.bounds = box.bounds;
    std::map<std::string, int> index_of;
    for (std::size_t i = 0; i < names.size(); ++i) index_of[names[i]] = static_cast<int>(i);
    prob.triggers.assign(names.size(), {});
    for (const auto& eq : equations) {
        IndexedPoly p = index_equation(eq, index_of);
        const std::size_t id = prob.equations.size();
        if (p.max_var < 0)
            prob.constant_equations.push_back(id);
        else
            prob.triggers[static_cast<std::size_t>(p.max_var)].push_back(id);
        prob.equations.push_back(std::move(p));
    }
    return prob;
}

Witness make_witness(const EnumerationProblem& prob, const std::vector<Integer>& values) {
    Witness w;
    for (std::size_t i = 0; i < prob.names.size(); ++i) w.assignment[prob.names[i]] = values[i];
    return w;
}

/// Plain nested enumeration in lex order; calls sink on every solution until
/// it returns false.
bool enumerate_plain(const EnumerationProblem& prob, std::size_t depth,
                     std::vector<Integer>& values,
                     const std::function<bool(const std::vector<Integer>&)>& sink) {
    if (depth == prob.names.size()) return sink(values);
    const auto& [lo, hi] = prob.bounds[depth];
    for (Integer v = lo; v <= hi; ++v) {
        values[depth] = v;
        bool ok = true;
        for (std::size_t id : prob.triggers[depth])
            if (eval_indexed(prob.equations[id], values) != 0) {
                ok = false;
                break;
            }
        if (ok && !enumerate_plain(prob, depth + 1, values, sink)) return false;
    }
    return true;
}

bool constants_hold(const EnumerationProblem& prob) {
    for (std::size_t id : prob.constant_equations)
        if (prob.equations[id].constant != 0) return false;
    return true;
}

std::optional<Witness> solve_chunked(const EnumerationProblem& prob, int jobs) {
    if (!constants_hold(prob)) return std::nullopt;
    if (prob.names.empty()) return Witness{};

    const auto& [lo, hi] = prob.bounds[0];
    Integer span = hi - lo + 1;
    int chunks = jobs > 1 && span > 1 ? jobs : 1;
    if (Integer(chunks) > span) chunks = static_cast<int>(span.get_ui());

    if (chunks == 1) {
        std::optional<Witness> found;
        std::vector<Integer> values(prob.names.size());
        enumerate_plain(prob, 0, values, [&](const std::vector<Integer>& v) {
            found = make_witness(prob, v);
            return false;
        });
        return found;
    }

    std::vector<std::optional<Witness>> results(static_cast<std::size_t>(chunks));
    std::vector<std::thread> workers;
    Integer width = span / chunks, extra = span % chunks;
    Integer start = lo;
    for (int c = 0; c < chunks; ++c) {
        Integer len = width + (Integer(c) < extra ? 1 : 0);
        Integer chunk_lo = start, chunk_hi = start + len - 1;
        start += len;
        workers.emplace_back([&, c, chunk_lo, chunk_hi]() {
            EnumerationProblem local = prob;
            local.bounds[0] = {chunk_lo, chunk_hi};
            std::vector<Integer> values(local.names.size());
            enumerate_plain(local, 0, values, [&](const std::vector<Integer>& v) {
                results[static_cast<std::size_t>(c)] = make_witness(local, v);
                return false;
            });
        });
    }
    for (auto& t : workers) t.join();
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

}  // namespace

void SearchBox::validate() const {
    for (const auto& [lo, hi] : bounds)
        if (lo > hi) throw std::invalid_argument("search box has lower > upper");
}

std::optional<Witness> bounded_solve_system(const DiophantineSystem& system, const SearchBox& box,
                                            int jobs) {
    system.validate();
    EnumerationProblem prob = build_problem(system.variables, system.equations, box);
    return solve_chunked(prob, jobs);
}

std::vector<Witness> bounded_all_system(const DiophantineSystem& system, const SearchBox& box,
                                        std::size_t max_count) {
    system.validate();
    EnumerationProblem prob = build_problem(system.variables, system.equations, box);
    std::vector<Witness> out;
    if (!constants_hold(prob)) return out;
    if (prob.names.empty()) {
        if (max_count > 0) out.push_back(Witness{});
        return out;
    }
    std::vector<Integer> values(prob.names.size());
    enumerate_plain(prob, 0, values, [&](const std::vector<Integer>& v) {
        out.push_back(make_witness(prob, v));
        return out.size() < max_count;
    });
    return out;
}

namespace {

/// Backtracking search over exponent slots, pruned by constraint propagation
/// on the derived system: an equation whose value is fixed must vanish, and
/// an equation with a single unassigned variable occurring linearly forces
/// that variable.
struct KPSearch {
    const KPInstance& instance;
    EnumerationProblem prob;
    std::vector<Integer> values;
    std::vector<bool> assigned;
    std::vector<std::size_t> trail;

    KPSearch(const KPInstance& inst, const EnumerationProblem& p)
        : instance(inst), prob(p), values(p.names.size()), assigned(p.names.size(), false) {}

    bool in_box(std::size_t i, const Integer& v) const {
        return prob.bounds[i].first <= v && v <= prob.bounds[i].second;
    }

    void assign(std::size_t i, Integer v) {
        values[i] = std::move(v);
        assigned[i] = true;
        trail.push_back(i);
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            assigned[trail.back()] = false;
            trail.pop_back();
        }
    }

    /// Returns false on conflict. Appends forced assignments to the trail.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& eq : prob.equations) {
                Integer residue = eq.constant;
                Integer linear_coeff = 0;
                std::size_t pending = SIZE_MAX;
                bool nonlinear_pending = false;
                for (const auto& m : eq.monos) {
                    Integer t = m.coeff;
                    std::size_t unassigned = SIZE_MAX;
                    int unassigned_count = 0;
                    for (int v : m.vars) {
                        auto idx = static_cast<std::size_t>(v);
                        if (assigned[idx]) {
                            t *= values[idx];
                        } else {
                            unassigned = idx;
                            ++unassigned_count;
                        }
                    }
                    if (unassigned_count == 0) {
                        residue += t;
                        continue;
                    }
                    if (pending == SIZE_MAX) pending = unassigned;
                    if (unassigned_count > 1 || unassigned != pending) {
                        nonlinear_pending = true;
                        pending = SIZE_MAX - 1;  // distinct sentinel: give up on forcing
                    } else {
                        linear_coeff += t;
                    }
                }
                if (pending == SIZE_MAX) {
                    if (residue != 0) return false;
                    continue;
                }
                if (nonlinear_pending) continue;
                // linear_coeff * x + residue = 0
                if (linear_coeff == 0) {
                    if (residue != 0) return false;
                    continue;
                }
                Integer q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residue.get_mpz_t(),
                            linear_coeff.get_mpz_t());
                if (rem != 0) return false;
                q = -q;
                if (!in_box(pending, q)) return false;
                assign(pending, std::move(q));
                changed = true;
            }
        }
        return true;
    }

    /// DFS in index order; sink receives full witnesses in lex order.
    bool search(const std::function<bool(const std::vector<Integer>&)>& sink) {
        std::size_t next = SIZE_MAX;
        for (std::size_t i = 0; i < assigned.size(); ++i)
            if (!assigned[i]) {
                next = i;
                break;
            }
        if (next == SIZE_MAX) {
            std::vector<Integer> eps = values;
            auto [nf, hit] = evaluate_kp(instance, eps);
            (void)nf;
            if (!hit) return true;  // pruning is conservative; keep scanning
            return sink(values);
        }
        const auto& [lo, hi] = prob.bounds[next];
        for (Integer v = lo; v <= hi; ++v) {
            std::size_t mark = trail.size();
            assign(next, v);
            if (propagate() && !search(sink)) return false;
            undo_to(mark);
        }
        return true;
    }
};

EnumerationProblem kp_problem(const KPInstance& instance, const SearchBox& box) {
    instance.validate();
    if (box.size() != instance.inputs.size())
        throw std::invalid_argument("search box dimension does not match input count");
    DiophantineSystem derived = kp_to_system(instance);
    std::vector<std::string> names;
    names.reserve(instance.inputs.size());
    for (std::size_t i = 1; i <= instance.inputs.size(); ++i) names.push_back(slot_name(i));
    return build_problem(names, derived.equations, box);
}

}  // namespace

std::optional<Witness> bounded_solve_kp(const KPInstance& instance, const SearchBox& box,
                                        int jobs) {
    EnumerationProblem prob = kp_problem(instance, box);
    if (!constants_hold(prob)) return std::nullopt;
    if (prob.names.empty()) {
        return instance.target.is_identity() ? std::optional<Witness>(Witness{}) : std::nullopt;
    }

    // Root propagation is shared by all shards.
    KPSearch root(instance, prob);
    if (!root.propagate()) return std::nullopt;

    std::size_t branch = SIZE_MAX;
    for (std::size_t i = 0; i < root.assigned.size(); ++i)
        if (!root.assigned[i]) {
            branch = i;
            break;
        }
    if (branch == SIZE_MAX) {
        auto [nf, hit] = evaluate_kp(instance, root.values);
        (void)nf;
        if (hit) {
            Witness w = make_witness(prob, root.values);
            return w;
        }
        return std::nullopt;
    }

    const auto [lo, hi] = prob.bounds[branch];
    Integer span = hi - lo + 1;
    int chunks = jobs > 1 && span > 1 ? jobs : 1;
    if (Integer(chunks) > span) chunks = static_cast<int>(span.get_ui());

    auto run_range = [&](const Integer& clo, const Integer& chi) -> std::optional<Witness> {
        KPSearch s(instance, prob);
        for (std::size_t t = 0; t < root.trail.size(); ++t) {
            std::size_t idx = root.trail[t];
            s.assign(idx, root.values[idx]);
        }
        std::optional<Witness> found;
        for (Integer v = clo; v <= chi && !found; ++v) {
            std::size_t mark = s.trail.size();
            s.assign(branch, v);
            if (s.propagate())
                s.search([&](const std::vector<Integer>& vals) {
                    found = make_witness(prob, vals);
                    return false;
                });
            s.undo_to(mark);
        }
        return found;
    };

    if (chunks == 1) return run_range(lo, hi);

    std::vector<std::optional<Witness>> results(static_cast<std::size_t>(chunks));
    std::vector<std::thread> workers;
    Integer width = span / chunks, extra = span % chunks;
    Integer start = lo;
    for (int c = 0; c < chunks; ++c) {
        Integer len = width + (Integer(c) < extra ? 1 : 0);
        Integer chunk_lo = start, chunk_hi = start + len - 1;
        start += len;
        workers.emplace_back([&, c, chunk_lo, chunk_hi]() {
            results[static_cast<std::size_t>(c)] = run_range(chunk_lo, chunk_hi);
        });
    }
    for (auto& t : workers) t.join();
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

std::vector<Witness> bounded_all_kp(const KPInstance& instance, const SearchBox& box,
                                    std::size_t max_count) {
    EnumerationProblem prob = kp_problem(instance, box);
    std::vector<Witness> out;
    if (!constants_hold(prob)) return out;
    if (prob.names.empty()) {
        if (instance.target.is_identity() && max_count > 0) out.push_back(Witness{});
        return out;
    }
    KPSearch s(instance, prob);
    if (!s.propagate()) return out;
    s.search([&](const std::vector<Integer>& vals) {
        out.push_back(make_witness(prob, vals));
        return out.size() < max_count;
    });
    return out;
}

std::vector<Integer> witness_to_eps(const Witness& w, std::size_t k) {
    std::vector<Integer> eps;
    eps.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        auto it = w.assignment.find(slot_name(i));
        if (it == w.assignment.end())
            throw std::invalid_argument("witness is missing slot " + slot_name(i));
        eps.push_back(it->second);
    }
    return eps;
}

}  // namespace nilknap
