#pragma once

#include <cctype>
#include <string>
#include <utility>

namespace nilknap {

/// Natural ordering for variable names: a trailing decimal suffix is
/// compared numerically, so e2 < e10 and G4 < G26. Names without a common
/// alphabetic stem fall back to plain string comparison.
inline int natural_compare(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) -> std::pair<std::string, std::string> {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        return {s.substr(0, i), s.substr(i)};
    };
    auto [stem_a, num_a] = split(a);
    auto [stem_b, num_b] = split(b);
    if (stem_a != stem_b) return stem_a < stem_b ? -1 : 1;
    if (num_a.empty() || num_b.empty()) {
        if (num_a == num_b) return 0;
        return num_a < num_b ? -1 : 1;
    }
    if (num_a.size() != num_b.size()) return num_a.size() < num_b.size() ? -1 : 1;
    if (num_a != num_b) return num_a < num_b ? -1 : 1;
    return 0;
}

struct NameLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return natural_compare(a, b) < 0;
    }
};

/// Unordered variable pair, canonicalized so the lesser name comes first.
struct VarPair {
    std::string first, second;
    VarPair() = default;
    VarPair(std::string a, std::string b) {
        if (natural_compare(a, b) <= 0) {
            first = std::move(a);
            second = std::move(b);
        } else {
            first = std::move(b);
            second = std::move(a);
        }
    }
    bool operator==(const VarPair& o) const { return first == o.first && second == o.second; }
    bool operator<(const VarPair& o) const {
        int c = natural_compare(first, o.first);
        if (c != 0) return c < 0;
        return natural_compare(second, o.second) < 0;
    }
};

}  // namespace nilknap
