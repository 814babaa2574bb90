#include "nilknap/universal.hpp"

#include <sstream>
#include <stdexcept>

namespace nilknap {
namespace {

Term V(const std::string& name) { return Term::variable(name); }
Term C(const Integer& v) { return Term::constant(ConstExpr(v)); }
Term C(long v) { return Term::constant(ConstExpr(Integer(v))); }
Term C(const ConstExpr& v) { return Term::constant(v); }
Term operator+(const Term& a, const Term& b) { return Term::sum(a, b); }
Term operator*(const Term& a, const Term& b) { return Term::product(a, b); }
Term operator-(const Term& a, const Term& b) { return Term::sum(a, b.negated()); }

}  // namespace

void UniversalParams::validate() const {
    if (x <= 0 || z <= 0 || y <= 0 || u <= 0)
        throw std::invalid_argument("universal system parameters must be positive");
    if (toy_exponent && *toy_exponent <= 0)
        throw std::invalid_argument("toy exponent must be positive");
}

DiophantineSystem jones_system(const UniversalParams& params) {
    params.validate();

    DiophantineSystem sys;
    for (int i = 1; i <= 27; ++i) sys.declare("G" + std::to_string(i));
    for (const char* v : {"B", "C1", "D1", "c", "e", "l", "t", "m", "g", "S", "T", "N",
                          "R", "P", "K", "h", "M", "U", "Y", "w", "s", "D", "I", "o",
                          "F", "i", "E", "G", "H", "j", "alf", "Del", "eps", "lam",
                          "gam", "phi"})
        sys.declare(v);

    const Integer& x = params.x;
    const Integer bz = params.z, by = params.y, bu = params.u;

    // The tower constant: 5^59 itself materializes exactly; the exponent
    // 5^59 + 1 in B's equation keeps the outer power symbolic. A toy
    // exponent substitutes both occurrences.
    const ConstExpr five59 = ConstExpr::pow(ConstExpr(Integer(5)), ConstExpr(Integer(59)));
    const ConstExpr tower_base = params.toy_exponent ? ConstExpr(*params.toy_exponent) : five59;
    const ConstExpr b_coeff =
        ConstExpr(Integer(2)) *
        ConstExpr::pow(ConstExpr(2 * bz), tower_base + ConstExpr(Integer(1)));

    auto eq = [&sys](const Term& lhs, const Term& rhs) { sys.equations.push_back({lhs, rhs}); };

    eq(V("G1"), V("G26") * V("G26"));
    eq(V("G2"), V("M") * V("U"));
    eq(V("G3"), V("B") * (C(2) * V("G23") - V("B")) - C(1));
    eq(V("G4"), V("G23") * V("C1"));
    eq(V("G5"), V("c") * V("c"));
    eq(V("G6"), V("G5") * V("G5"));
    eq(V("G8"), V("G24") * V("G24"));
    eq(V("G9"), V("lam") * V("B"));
    eq(V("G10"), V("G") * V("H"));
    eq(V("G11"), V("F") * V("F"));
    eq(V("G12"), V("G23") * V("E"));
    eq(V("G13"), V("G25") * V("G25"));
    eq(V("G14"), V("G23") * V("G25"));
    eq(V("G15"), V("N") * V("N"));
    eq(V("G16"), V("Y") * V("K"));
    eq(V("G18"), V("P") * V("K"));
    eq(V("G20"), V("G8") * V("G24"));
    eq(V("G21"), V("G8") * V("G8"));
    eq(V("G22"), V("G6") * V("G20"));
    eq(V("B"), C(b_coeff) * (V("G1") * V("G1")));
    eq(V("D1"), C(1) + V("G27") + V("C1") * (V("G23") - V("B")) + V("alf") * V("G3"));
    eq((V("G4") - V("C1")) * (V("G4") + V("C1")) + C(1), V("D1") * V("D1"));
    eq(V("C1"), C(tower_base) + V("Del") * (V("G23") - C(1)));
    eq(V("c"), C(1) + (V("G26") - V("eps")) * V("B") + V("g"));
    eq(V("e") + C(2 * bz) * (V("G26") * V("l")) + C(2 * bz) * (V("B") * V("G6")) + V("G7"),
       C(2 * bz) * (C(1) + V("G27")));
    eq(V("l"), C(bu) + V("t") * (V("B") - C(2 * bz)));
    eq(V("e"), C(by) + V("m") * (V("B") - C(2 * bz)));
    eq(V("S"), V("g") - C(4 * bz * bz) * V("G22") + V("l") * V("G24") +
                   V("e") * (V("G8") + C(4 * bz) * V("G22")) +
                   C(2 * bz) * (V("G9") * (C(-2 * bz) * V("G22") + V("G20") + V("G21"))));
    eq(V("T"), V("G24") - C(1) - (V("G26") - C(1)) * V("l") +
                   (V("G9") - C(2 * bz) * V("lam")) * (V("G24") + V("G8")) +
                   C(2 * bz) * ((V("B") - C(2)) * V("G21")));
    eq(V("N"), C(16 * bz) * (V("G20") * V("G8")));
    eq(V("R"), V("S") * (V("G15") - V("N")) + (V("T") + C(1)) * (V("G15") - C(1)));
    eq(V("P"), C(2) * (V("M") * V("G2")));
    eq((V("K") - V("G18")) * (V("K") + V("G18")) + V("G19") * V("G19"), C(1));
    eq((C(2) * V("G25") - C(2) * V("G16") - V("K")) *
           (C(2) * V("G25") - C(2) * V("G16") + V("K")) +
           V("G17"),
       C(0));
    eq(V("K"), V("R") + C(1) + V("h") * (V("P") - C(1)));
    eq(V("M"), V("R") * V("Y"));
    eq(V("U"), V("G15") * V("w"));
    eq(V("Y"), V("G15") * V("s"));
    eq(V("D"), C(-2) * V("G25") - C(5) * V("gam") + V("G26") * V("w") +
                   V("G23") * (V("G25") + C(4) * V("gam")));
    eq(V("I"), V("D") + V("o") * V("F"));
    eq((V("D") - V("G14")) * (V("D") + V("G14")) + V("G13"), C(1));
    eq(V("E"), V("i") * V("G13") + C(1));
    eq((V("G12") - V("E")) * (V("G12") + V("E")) - V("G11") + C(1), C(0));
    eq(V("G"), V("G23") + V("G11") * (V("G11") - V("G23")));
    eq(V("H"), C(2) * V("R") + C(1) + V("j") * V("G25"));
    eq(V("I") * V("I") + V("H") * (V("H") - V("G10")), C(1));
    eq(V("G23"), V("G2") + V("M"));
    eq(V("G24"), C(1) + V("G9") - V("lam"));
    eq(V("G25"), C(2) * V("R") + C(1) + V("C1") + V("phi"));
    eq(V("G26"), V("eps") + C(x));
    eq(V("G27"), V("lam") * (V("B") - C(1)));

    std::ostringstream note;
    note << "universal system: x=" << x << " bz=" << bz << " by=" << by << " bu=" << bu;
    sys.notes.push_back(note.str());
    if (params.toy_exponent)
        sys.notes.push_back("toy exponent " + to_string(*params.toy_exponent) +
                            " substituted for 5^59");
    sys.validate();
    return sys;
}

ResourceReport resource_report(const DiophantineSystem& system, const CompileResult& compiled) {
    ResourceReport r;
    r.equations = system.equations.size();
    r.variables = system.variables.size();
    r.input_count = compiled.instance.inputs.size();
    r.rank = compiled.log.rank;
    r.equation_carriers = compiled.log.equation_carriers;
    r.letter_pairs = compiled.log.letter_pairs;
    r.internal_ties = compiled.log.internal_ties;
    r.reuse_ties = compiled.log.reuse_ties;
    r.accumulators = compiled.log.accumulators;
    r.forced_constants = compiled.log.forced_constants;
    r.total_commutators = compiled.log.total_commutators();
    r.packed = compiled.log.packed;
    return r;
}

std::string ResourceReport::render() const {
    std::ostringstream os;
    os << "resource report (" << (packed ? "packed" : "fresh-pair") << " mode)\n";
    os << "  equations:            " << equations << "\n";
    os << "  variables:            " << variables << "\n";
    os << "  inputs:               " << input_count << "\n";
    os << "  group rank:           " << rank << "\n";
    os << "  equation commutators: " << equation_carriers << "\n";
    os << "  gadget letter pairs:  " << letter_pairs << "\n";
    os << "  internal ties:        " << internal_ties << "\n";
    os << "  variable-reuse ties:  " << reuse_ties << "\n";
    if (accumulators > 0) os << "  accumulators:         " << accumulators << "\n";
    if (forced_constants > 0) os << "  forced constants:     " << forced_constants << "\n";
    os << "  total commutators:    " << total_commutators << "\n";
    os << "  paper comparison (informational): 167 equation + 155 tie = 322 commutators, "
          "334 inputs\n";
    return os.str();
}

}  // namespace nilknap
