// Symbolic coefficient functions on the weight lattice: exact-rational affine
// combinations of the symbols z, w, delta0, a_i, b_i, and expression trees of
// sigma factors closed under sum, product, quotient, and symbol shifts.
#pragma once

#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eqg/lattice.hpp"
#include "eqg/params.hpp"

namespace eqg {

// Exact rational with small operands (shift bookkeeping only).
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_zero() const { return num == 0; }
    double to_double() const { return double(num) / double(den); }
    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
};

// c0 + rz*z + rw*w + rd0*delta0 + sum_i ca[i]*a_i + sum_i cb[i]*b_i, with the
// a-symbols evaluated at the first lattice argument and the b-symbols at the
// second.  Shifting substitutes a_i -> a_i(m+dup) exactly through the rational
// w-ledger, since a_i(m+d) = a_i(m) + w*(d_i - |d|/n).
struct AffineForm {
    cplx c0{0.0, 0.0};
    Rat rz, rw, rd0;
    std::vector<Rat> ca, cb;

    explicit AffineForm(int n = 0) : ca(n), cb(n) {}

    AffineForm shifted_symbols(const std::vector<int>& dup, const std::vector<int>& dlo) const {
        AffineForm out = *this;
        const int n = int(ca.size());
        Rat add_w;
        long long sup = 0, slo = 0;
        for (int i = 0; i < n; ++i) {
            add_w = add_w + ca[i] * Rat(dup[i]) + cb[i] * Rat(dlo[i]);
            sup += dup[i];
            slo += dlo[i];
        }
        Rat suma, sumb;
        for (int i = 0; i < n; ++i) {
            suma = suma + ca[i];
            sumb = sumb + cb[i];
        }
        add_w = add_w - suma * Rat(sup, n) - sumb * Rat(slo, n);
        out.rw = out.rw + add_w;
        return out;
    }

    cplx eval(const std::vector<cplx>& a, const std::vector<cplx>& b, cplx z,
              const ModularParams& p) const {
        cplx v = c0 + rz.to_double() * z + rw.to_double() * p.w + rd0.to_double() * p.delta0;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (!ca[i].is_zero()) v += ca[i].to_double() * a[i];
            if (!cb[i].is_zero()) v += cb[i].to_double() * b[i];
        }
        return v;
    }
};

// Expression tree over sigma(affine form), constants, +, *, /.
struct FnNode;
using Fn = std::shared_ptr<const FnNode>;

struct FnNode {
    enum Kind { Const, Sig, Add, Mul, Div } kind = Const;
    cplx cval{0.0, 0.0};
    AffineForm af{0};
    std::vector<Fn> kids;
};

Fn fn_const(cplx v);
Fn fn_sigma(const AffineForm& af);
Fn fn_add(Fn a, Fn b);
Fn fn_mul(Fn a, Fn b);
Fn fn_div(Fn num, Fn den);

// Substitute a -> a(. + dup), b -> b(. + dlo) throughout the tree.
Fn fn_shift(const Fn& f, const std::vector<int>& dup, const std::vector<int>& dlo);

// Evaluate at lattice points (ma for the a-symbols, mb for the b-symbols) and
// spectral parameter z.
cplx fn_eval(const Fn& f, const Weight& ma, const Weight& mb, cplx z, const ModularParams& p);

// Convenience affine builders (n components).
AffineForm af_const(int n, cplx v);
AffineForm af_a_diff(int n, int i, int j);          // a_i - a_j
AffineForm af_b_diff(int n, int i, int j);          // b_i - b_j
AffineForm af_plus_w(AffineForm f, long long k);    // f + k*w

// prod_{i<j} sigma(a_i - a_j) and prod_{i<j} sigma(b_i - b_j).
Fn fn_delta_a(int n);
Fn fn_delta_b(int n);

}  // namespace eqg
