#include "nilknap/format.hpp"

#include <cctype>
#include <sstream>

namespace nilknap {
namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string print_monomial(const GeneralPoly::Monomial& mono) {
    std::string out;
    std::size_t i = 0;
    while (i < mono.size()) {
        std::size_t run = i;
        while (run < mono.size() && mono[run] == mono[i]) ++run;
        if (!out.empty()) out += "*";
        out += mono[i];
        if (run - i > 1) out += "^" + std::to_string(run - i);
        i = run;
    }
    return out;
}

}  // namespace

std::string print_poly(const GeneralPoly& poly) {
    if (poly.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : poly.terms()) {
        std::string c_text;
        bool negative = false;
        if (coeff.is_literal()) {
            Integer v = coeff.value();
            negative = v < 0;
            Integer mag = negative ? Integer(-v) : v;
            if (mag != 1 || mono.empty()) c_text = mag.get_str();
        } else {
            c_text = coeff.to_text();
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string m_text = print_monomial(mono);
        if (!c_text.empty() && !m_text.empty())
            out += c_text + "*" + m_text;
        else
            out += c_text + m_text;
    }
    return out;
}

std::string print_system(const DiophantineSystem& system) {
    std::ostringstream os;
    for (const auto& note : system.notes) os << "# " << note << "\n";
    os << "vars:";
    for (const auto& v : system.variables) os << " " << v;
    os << "\n";
    for (const auto& eq : system.equations)
        os << "eq: " << print_poly(GeneralPoly::from_term(eq.lhs)) << " = "
           << print_poly(GeneralPoly::from_term(eq.rhs)) << "\n";
    return os.str();
}

namespace {

/// Recursive-descent expression parser with line/column reporting.
class ExprParser {
  public:
    ExprParser(const std::string& text, int line, int col0)
        : text_(text), line_(line), col0_(col0) {}

    Term parse() {
        Term t = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Term parse_expr() {
        bool negative = false;
        skip_ws();
        if (eat('-'))
            negative = true;
        else
            (void)eat('+');
        Term acc = parse_term();
        if (negative) acc = acc.negated();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = Term::sum(acc, parse_term());
            else if (eat('-'))
                acc = Term::sum(acc, parse_term().negated());
            else
                break;
        }
        return acc;
    }

    Term parse_term() {
        Term acc = parse_factor();
        while (eat('*')) acc = Term::product(acc, parse_factor());
        return acc;
    }

    Term parse_factor() {
        Term base = parse_primary();
        if (eat('^')) {
            std::string digits = read_digits();
            if (digits.empty()) fail("expected integer exponent after '^'");
            if (digits.size() > 6) fail("exponent too large");
            long e = std::stol(digits);
            if (e == 0) return Term::constant(ConstExpr(Integer(1)));
            Term acc = base;
            for (long i = 1; i < e; ++i) acc = Term::product(acc, base);
            return acc;
        }
        return base;
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    Term parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return Term::constant(ConstExpr(Integer(digits)));
        }
        if (c == '(') {
            ++pos_;
            Term t = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (is_name_start(c)) {
            std::string name = read_name();
            if ((name == "pow" || name == "mul" || name == "add") && peek() == '(')
                return Term::constant(parse_cexpr_call(name));
            return Term::variable(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_name() {
        std::string out;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) out += text_[pos_++];
        return out;
    }

    ConstExpr parse_cexpr_call(const std::string& fn) {
        if (!eat('(')) fail("expected '('");
        ConstExpr a = parse_cexpr();
        if (!eat(',')) fail("expected ','");
        ConstExpr b = parse_cexpr();
        if (!eat(')')) fail("expected ')'");
        if (fn == "pow") return ConstExpr::pow(a, b);
        if (fn == "mul") return ConstExpr::mul(a, b);
        return ConstExpr::add(a, b);
    }

    ConstExpr parse_cexpr() {
        skip_ws();
        bool negative = eat('-');
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Integer v(read_digits());
            return ConstExpr(negative ? Integer(-v) : v);
        }
        if (pos_ < text_.size() && is_name_start(text_[pos_])) {
            std::string name = read_name();
            if (name == "pow" || name == "mul" || name == "add") {
                ConstExpr e = parse_cexpr_call(name);
                return negative ? e.negated() : e;
            }
        }
        fail("expected constant expression");
    }

    const std::string& text_;
    int line_, col0_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

DiophantineSystem parse_system(const std::string& text) {
    DiophantineSystem sys;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_vars = false;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            std::size_t body = line.find_first_not_of(" \t", start + 1);
            sys.notes.push_back(body == std::string::npos ? "" : line.substr(body));
            continue;
        }
        if (line.compare(start, 5, "vars:") == 0) {
            for (const auto& name : split_ws(line.substr(start + 5))) {
                if (!is_name_start(name[0]))
                    throw ParseError(lineno, static_cast<int>(start) + 6, "bad variable name");
                sys.declare(name);
            }
            saw_vars = true;
            continue;
        }
        if (line.compare(start, 3, "eq:") == 0) {
            std::string body = line.substr(start + 3);
            std::size_t eq_pos = body.find('=');
            if (eq_pos == std::string::npos)
                throw ParseError(lineno, static_cast<int>(start) + 4, "equation needs '='");
            int col0 = static_cast<int>(start) + 4;
            std::string lhs_text = body.substr(0, eq_pos);
            std::string rhs_text = body.substr(eq_pos + 1);
            Term lhs = ExprParser(lhs_text, lineno, col0).parse();
            Term rhs = ExprParser(rhs_text, lineno, col0 + static_cast<int>(eq_pos) + 1).parse();
            sys.equations.push_back({lhs, rhs});
            continue;
        }
        throw ParseError(lineno, static_cast<int>(start) + 1, "unrecognized line");
    }
    if (!saw_vars && !sys.equations.empty())
        throw ParseError(lineno, 1, "missing vars: declaration");
    sys.validate();
    return sys;
}

std::string print_normal_form(const NormalForm& nf) {
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += " ";
    };
    for (int i = 1; i <= nf.rank(); ++i) {
        if (nf.alpha(i) == 0) continue;
        sep();
        out += "x" + std::to_string(i);
        if (nf.alpha(i) != 1) out += "^" + nf.alpha(i).get_str();
    }
    for (const auto& [key, b] : nf.beta()) {
        sep();
        out += "c" + std::to_string(key.first) + "," + std::to_string(key.second);
        if (b != 1) out += "^" + b.get_str();
    }
    return out.empty() ? "1" : out;
}

namespace {

NormalForm parse_word_tokens(const std::string& body, int rank, int lineno) {
    NormalForm acc = NormalForm::identity(rank);
    for (const auto& tok : split_ws(body)) {
        if (tok == "1") continue;
        std::string head = tok;
        Integer exp(1);
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            head = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            if (e.empty() || (!std::isdigit(static_cast<unsigned char>(e[0])) && e[0] != '-'))
                throw ParseError(lineno, 1, "bad exponent in token '" + tok + "'");
            exp = Integer(e);
        }
        try {
            if (head.size() >= 2 && head[0] == 'x') {
                int idx = std::stoi(head.substr(1));
                acc = multiply(acc, NormalForm::generator(rank, idx, exp));
                continue;
            }
            if (head.size() >= 4 && head[0] == 'c') {
                auto comma = head.find(',');
                if (comma != std::string::npos) {
                    int i = std::stoi(head.substr(1, comma - 1));
                    int j = std::stoi(head.substr(comma + 1));
                    acc = multiply(acc, NormalForm::basic_commutator(rank, i, j, exp));
                    continue;
                }
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, 1, std::string(e.what()) + " in token '" + tok + "'");
        }
        throw ParseError(lineno, 1, "bad word token '" + tok + "'");
    }
    return acc;
}

}  // namespace

std::string print_instance(const KPInstance& instance) {
    std::ostringstream os;
    os << "rank: " << instance.rank << "\n";
    for (std::size_t i = 0; i < instance.inputs.size(); ++i) {
        std::string w = print_normal_form(instance.inputs[i]);
        os << "g" << (i + 1) << ": " << (w == "1" ? "" : w) << "\n";
    }
    std::string t = print_normal_form(instance.target);
    os << "g: " << (t == "1" ? "" : t) << "\n";
    if (!instance.variable_map.empty()) {
        os << "map:";
        for (const auto& [name, idx] : instance.variable_map) os << " " << name << "=" << idx;
        os << "\n";
    }
    return os.str();
}

KPInstance parse_instance(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int rank = 0;
    std::vector<std::pair<int, std::string>> input_lines;  // line number, body
    std::string target_body;
    bool saw_target = false;
    int target_line = 0;
    std::map<std::string, int> var_map;

    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        if (line.compare(start, 5, "rank:") == 0) {
            try {
                rank = std::stoi(line.substr(start + 5));
            } catch (...) {
                throw ParseError(lineno, static_cast<int>(start) + 6, "bad rank");
            }
            continue;
        }
        if (line.compare(start, 4, "map:") == 0) {
            for (const auto& item : split_ws(line.substr(start + 4))) {
                auto eq_pos = item.find('=');
                if (eq_pos == std::string::npos)
                    throw ParseError(lineno, static_cast<int>(start) + 5,
                                     "map entries look like name=index");
                var_map[item.substr(0, eq_pos)] = std::stoi(item.substr(eq_pos + 1));
            }
            continue;
        }
        if (line.compare(start, 2, "g:") == 0) {
            target_body = line.substr(start + 2);
            saw_target = true;
            target_line = lineno;
            continue;
        }
        if (line[start] == 'g') {
            auto colon = line.find(':', start);
            if (colon != std::string::npos) {
                int idx = 0;
                try {
                    idx = std::stoi(line.substr(start + 1, colon - start - 1));
                } catch (...) {
                    throw ParseError(lineno, static_cast<int>(start) + 1, "bad input index");
                }
                if (idx != static_cast<int>(input_lines.size()) + 1)
                    throw ParseError(lineno, static_cast<int>(start) + 1,
                                     "inputs must be numbered consecutively from g1");
                input_lines.emplace_back(lineno, line.substr(colon + 1));
                continue;
            }
        }
        throw ParseError(lineno, static_cast<int>(start) + 1, "unrecognized line");
    }
    if (rank < 1) throw ParseError(1, 1, "missing or invalid rank");
    if (!saw_target) throw ParseError(lineno, 1, "missing target line 'g:'");

    KPInstance inst;
    inst.rank = rank;
    for (const auto& [ln, body] : input_lines)
        inst.inputs.push_back(parse_word_tokens(body, rank, ln));
    inst.target = parse_word_tokens(target_body, rank, target_line);
    inst.variable_map = std::move(var_map);
    inst.validate();
    return inst;
}

std::string print_witness(const Witness& w, const std::vector<std::string>& order) {
    std::string out;
    for (const auto& name : order) {
        auto it = w.assignment.find(name);
        if (it == w.assignment.end())
            throw std::invalid_argument("witness is missing variable " + name);
        if (!out.empty()) out += ",";
        out += name + "=" + it->second.get_str();
    }
    return out;
}

Assignment parse_witness(const std::string& text) {
    Assignment out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        auto eq_pos = item.find('=');
        if (eq_pos == std::string::npos)
            throw ParseError(1, 1, "witness entries look like name=value");
        std::string name = item.substr(0, eq_pos);
        std::size_t b = name.find_first_not_of(" \t");
        std::size_t e = name.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError(1, 1, "empty witness name");
        name = name.substr(b, e - b + 1);
        out[name] = Integer(item.substr(eq_pos + 1));
    }
    return out;
}

std::string print_matrix(const UnitriangularMatrix& m) {
    std::ostringstream os;
    for (int i = 1; i <= m.dim(); ++i) {
        for (int j = 1; j <= m.dim(); ++j) {
            if (j > 1) os << " ";
            os << m.entry(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace nilknap
