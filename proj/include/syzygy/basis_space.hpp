#ifndef SYZYGY_BASIS_SPACE_HPP
#define SYZYGY_BASIS_SPACE_HPP

#include <memory>
#include <string>
#include <vector>

#include "syzygy/combinatorics.hpp"

namespace syzygy {

/// A finite-dimensional space with an enumerated, ordered monomial basis.
/// All constructions are over the 2-dimensional space U with basis 1, x;
/// basis order is the fixed graded-lex order on exponent labels.
struct BasisSpace {
    enum class Kind { Sym, Div, Wedge2Sym, Wedge2Div, SymOfDiv, Tensor, DirectSum };

    Kind kind = Kind::Sym;
    int d = 0;  // Sym(d)/Div(d) degree, Wedge2*(m), SymOfDiv outer degree q
    int n = 0;  // SymOfDiv inner degree
    std::vector<BasisSpace> parts;
    long dim = 0;

    static BasisSpace sym(int d) { return {Kind::Sym, d, 0, {}, d + 1}; }
    static BasisSpace div(int d) { return {Kind::Div, d, 0, {}, d + 1}; }
    static BasisSpace wedge2_sym(int m) { return {Kind::Wedge2Sym, m, 0, {}, wedge2_dim(m)}; }
    static BasisSpace wedge2_div(int m) { return {Kind::Wedge2Div, m, 0, {}, wedge2_dim(m)}; }
    static BasisSpace sym_of_div(int q, int n) {
        return {Kind::SymOfDiv, q, n, {}, binomial(q + n, n)};
    }
    static BasisSpace tensor(std::vector<BasisSpace> ps) {
        long dim = 1;
        for (auto& p : ps) dim *= p.dim;
        return {Kind::Tensor, 0, 0, std::move(ps), dim};
    }
    static BasisSpace direct_sum(std::vector<BasisSpace> ps) {
        long dim = 0;
        for (auto& p : ps) dim += p.dim;
        return {Kind::DirectSum, 0, 0, std::move(ps), dim};
    }

    std::string name() const {
        switch (kind) {
            case Kind::Sym: return "S^" + std::to_string(d) + "U";
            case Kind::Div: return "D^" + std::to_string(d) + "U";
            case Kind::Wedge2Sym: return "W2(S^" + std::to_string(d) + "U)";
            case Kind::Wedge2Div: return "W2(D^" + std::to_string(d) + "U)";
            case Kind::SymOfDiv:
                return "S^" + std::to_string(d) + "(D^" + std::to_string(n) + "U)";
            case Kind::Tensor: {
                std::string s;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    s += (i ? "*" : "") + parts[i].name();
                return s;
            }
            case Kind::DirectSum: {
                std::string s;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    s += (i ? "+" : "") + parts[i].name();
                return "(" + s + ")";
            }
        }
        return "?";
    }

    std::string label(long index) const {
        switch (kind) {
            case Kind::Sym: return "x^" + std::to_string(index);
            case Kind::Div: return "x(" + std::to_string(index) + ")";
            case Kind::Wedge2Sym:
            case Kind::Wedge2Div: {
                // invert idx = i(i-1)/2 + j
                int i = 1;
                while (static_cast<long>(i) * (i + 1) / 2 <= index) ++i;
                long j = index - static_cast<long>(i) * (i - 1) / 2;
                const char* fmt = kind == Kind::Wedge2Sym ? "x^" : "x(";
                const char* close = kind == Kind::Wedge2Sym ? "" : ")";
                return std::string(fmt) + std::to_string(i) + close + "^" + fmt + std::to_string(j) +
                       close;
            }
            case Kind::SymOfDiv: {
                MonomialTable t(n + 1, d);
                const auto& e = t.exponents(static_cast<int>(index));
                std::string s;
                for (int v = 0; v <= n; ++v)
                    if (e[v] > 0) s += "x(" + std::to_string(v) + ")^" + std::to_string(e[v]) + " ";
                if (s.empty()) s = "1";
                return s;
            }
            case Kind::Tensor: {
                std::string s;
                long rest = index;
                // rightmost factor varies fastest
                std::vector<long> comp(parts.size());
                for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
                    comp[i] = rest % parts[i].dim;
                    rest /= parts[i].dim;
                }
                for (std::size_t i = 0; i < parts.size(); ++i)
                    s += (i ? " (x) " : "") + parts[i].label(comp[i]);
                return s;
            }
            case Kind::DirectSum: {
                long off = index;
                for (const auto& p : parts) {
                    if (off < p.dim) return p.name() + ":" + p.label(off);
                    off -= p.dim;
                }
                return "?";
            }
        }
        return "?";
    }
};

}  // namespace syzygy

#endif
