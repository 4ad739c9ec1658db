#include "eqg/lattice_fn.hpp"

#include "eqg/theta.hpp"

namespace eqg {

Fn fn_const(cplx v) {
    auto n = std::make_shared<FnNode>();
    n->kind = FnNode::Const;
    n->cval = v;
    return n;
}

Fn fn_sigma(const AffineForm& af) {
    auto n = std::make_shared<FnNode>();
    n->kind = FnNode::Sig;
    n->af = af;
    return n;
}

static Fn fn_node(FnNode::Kind k, Fn a, Fn b) {
    auto n = std::make_shared<FnNode>();
    n->kind = k;
    n->kids = {std::move(a), std::move(b)};
    return n;
}

Fn fn_add(Fn a, Fn b) { return fn_node(FnNode::Add, std::move(a), std::move(b)); }
Fn fn_mul(Fn a, Fn b) { return fn_node(FnNode::Mul, std::move(a), std::move(b)); }
Fn fn_div(Fn num, Fn den) { return fn_node(FnNode::Div, std::move(num), std::move(den)); }

Fn fn_shift(const Fn& f, const std::vector<int>& dup, const std::vector<int>& dlo) {
    auto n = std::make_shared<FnNode>();
    n->kind = f->kind;
    n->cval = f->cval;
    if (f->kind == FnNode::Sig) n->af = f->af.shifted_symbols(dup, dlo);
    for (const Fn& k : f->kids) n->kids.push_back(fn_shift(k, dup, dlo));
    return n;
}

static cplx eval_node(const FnNode& f, const std::vector<cplx>& a, const std::vector<cplx>& b,
                      cplx z, const ModularParams& p) {
    switch (f.kind) {
        case FnNode::Const:
            return f.cval;
        case FnNode::Sig:
            return sigma(f.af.eval(a, b, z, p), p);
        case FnNode::Add:
            return eval_node(*f.kids[0], a, b, z, p) + eval_node(*f.kids[1], a, b, z, p);
        case FnNode::Mul:
            return eval_node(*f.kids[0], a, b, z, p) * eval_node(*f.kids[1], a, b, z, p);
        case FnNode::Div:
            return eval_node(*f.kids[0], a, b, z, p) / eval_node(*f.kids[1], a, b, z, p);
    }
    return cplx(0, 0);
}

cplx fn_eval(const Fn& f, const Weight& ma, const Weight& mb, cplx z, const ModularParams& p) {
    const auto a = avals(ma, p);
    const auto b = avals(mb, p);
    return eval_node(*f, a, b, z, p);
}

AffineForm af_const(int n, cplx v) {
    AffineForm f(n);
    f.c0 = v;
    return f;
}

AffineForm af_a_diff(int n, int i, int j) {
    AffineForm f(n);
    f.ca[i] = f.ca[i] + Rat(1);
    f.ca[j] = f.ca[j] - Rat(1);
    return f;
}

AffineForm af_b_diff(int n, int i, int j) {
    AffineForm f(n);
    f.cb[i] = f.cb[i] + Rat(1);
    f.cb[j] = f.cb[j] - Rat(1);
    return f;
}

AffineForm af_plus_w(AffineForm f, long long k) {
    f.rw = f.rw + Rat(k);
    return f;
}

Fn fn_delta_a(int n) {
    Fn out = fn_const(cplx(1, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out = fn_mul(out, fn_sigma(af_a_diff(n, i, j)));
    return out;
}

Fn fn_delta_b(int n) {
    Fn out = fn_const(cplx(1, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out = fn_mul(out, fn_sigma(af_b_diff(n, i, j)));
    return out;
}

}  // namespace eqg
