#include "skewext/smash.hpp"

#include <sstream>

namespace skewext {

void add_to(TensorElement& acc, const TensorKey& k, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = acc.find(k);
    if (it == acc.end()) {
        acc.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        acc.erase(it);
}

bool tensor_equal(const TensorElement& a, const TensorElement& b)
{
    if (a.size() != b.size())
        return false;
    for (const auto& [k, c] : a) {
        auto it = b.find(k);
        if (it == b.end() || !(it->second == c))
            return false;
    }
    return true;
}

std::string tensor_str(const TensorElement& x, const std::string& lp, const std::string& rp)
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (cs != "1")
            os << cs << "*";
        os << lp << BigradedAlgebra::label(k.left, k.i) << "(x)" << rp << BigradedAlgebra::label(k.right, k.j);
        first = false;
    }
    return os.str();
}

std::string to_string(SmashStatus s)
{
    switch (s) {
    case SmashStatus::unchecked: return "unchecked";
    case SmashStatus::normal: return "normal";
    case SmashStatus::certified: return "certified";
    case SmashStatus::failed: return "failed";
    }
    return "?";
}

const TensorElement& SmashTwist::R(const TensorKey& yx) const
{
    auto it = values.find(yx);
    if (it == values.end())
        throw std::out_of_range("twist undefined on " + BigradedAlgebra::label(yx.left, yx.i) + "(x)" +
                                BigradedAlgebra::label(yx.right, yx.j));
    return it->second;
}

std::vector<TensorKey> SmashTwist::basis(const Bidegree& c) const
{
    std::vector<TensorKey> out;
    for (const auto& a : X->support()) {
        Bidegree b{c.n - a.n, c.t - a.t};
        if (b.n < 0 || b.t < 0)
            continue;
        std::size_t dy = Y->dim(b);
        for (std::size_t i = 0; i < X->dim(a); ++i)
            for (std::size_t j = 0; j < dy; ++j)
                out.push_back({a, i, b, j});
    }
    return out;
}

TensorElement smash_multiply(const SmashTwist& T, const TensorKey& a, const TensorKey& b)
{
    TensorElement out;
    const TensorElement& r = T.R({a.right, a.j, b.left, b.i});
    for (const auto& [k, c] : r) {
        const Vector& xs = T.X->product(a.left, a.i, k.left, k.i);
        const Vector& ys = T.Y->product(k.right, k.j, b.right, b.j);
        Bidegree xd = a.left + k.left, yd = k.right + b.right;
        for (std::size_t p = 0; p < xs.size(); ++p) {
            if (xs[p].is_zero())
                continue;
            for (std::size_t q = 0; q < ys.size(); ++q)
                if (!ys[q].is_zero())
                    add_to(out, {xd, p, yd, q}, c * xs[p] * ys[q]);
        }
    }
    return out;
}

TensorElement smash_multiply(const SmashTwist& T, const TensorElement& a, const TensorElement& b)
{
    TensorElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            for (const auto& [k, c] : smash_multiply(T, ka, kb))
                add_to(out, k, ca * cb * c);
    return out;
}

SmashStatus certify_smash(SmashTwist& T, int N, int D)
{
    const Field f = T.X->field();
    const Scalar one = Scalar::one(f);
    auto fail = [&](const std::string& why) {
        T.status = SmashStatus::failed;
        T.counterexample = why;
        return T.status;
    };
    auto ok = [&](const Bidegree& c) { return c.n <= N && c.t <= D && T.in_window(c); };
    const Bidegree o{0, 0};
    if (T.X->dim(o) != 1 || T.Y->dim(o) != 1)
        return fail("factor is not connected");
    try {
        for (const auto& a : T.X->support()) {
            if (!ok(a))
                continue;
            for (std::size_t i = 0; i < T.X->dim(a); ++i) {
                TensorElement want{{{a, i, o, 0}, one}};
                if (!tensor_equal(T.R({o, 0, a, i}), want))
                    return fail("unit law: R(1(x)" + BigradedAlgebra::label(a, i) + ") != " +
                                BigradedAlgebra::label(a, i) + "(x)1");
            }
        }
        for (const auto& b : T.Y->support()) {
            if (!ok(b))
                continue;
            for (std::size_t j = 0; j < T.Y->dim(b); ++j) {
                TensorElement want{{{o, 0, b, j}, one}};
                if (!tensor_equal(T.R({b, j, o, 0}), want))
                    return fail("unit law: R(" + BigradedAlgebra::label(b, j) + "(x)1) != 1(x)" +
                                BigradedAlgebra::label(b, j));
            }
        }
        T.status = SmashStatus::normal;

        std::vector<TensorKey> all;
        for (int n = 0; n <= N; ++n)
            for (int t = 0; t <= D; ++t)
                if (ok({n, t}))
                    for (const auto& k : T.basis({n, t}))
                        all.push_back(k);
        TensorKey u{o, 0, o, 0};
        for (const auto& a : all) {
            TensorElement ea{{a, one}};
            if (!tensor_equal(smash_multiply(T, u, a), ea) || !tensor_equal(smash_multiply(T, a, u), ea))
                return fail("unit law fails on " + tensor_str(ea));
        }
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!ok(a.degree() + b.degree()))
                    continue;
                TensorElement ab = smash_multiply(T, a, b);
                for (const auto& c : all) {
                    if (!ok(a.degree() + b.degree() + c.degree()))
                        continue;
                    TensorElement lhs = smash_multiply(T, ab, TensorElement{{c, one}});
                    TensorElement rhs = smash_multiply(T, TensorElement{{a, one}}, smash_multiply(T, b, c));
                    if (!tensor_equal(lhs, rhs))
                        return fail("associativity fails on " + tensor_str({{a, one}}) + ", " +
                                    tensor_str({{b, one}}) + ", " + tensor_str({{c, one}}));
                }
            }
    } catch (const std::out_of_range& e) {
        return fail(e.what());
    }
    T.status = SmashStatus::certified;
    T.counterexample.clear();
    return T.status;
}

BigradedAlgebra smash_algebra(const SmashTwist& T)
{
    int N = std::min(T.X->max_n(), T.Y->max_n());
    int D = std::min(T.X->max_t(), T.Y->max_t());
    BigradedAlgebra S(T.X->field(), N, D);
    std::map<Bidegree, std::vector<TensorKey>> bases;
    std::map<TensorKey, std::size_t> index;
    for (int n = 0; n <= N; ++n)
        for (int t = 0; t <= D; ++t) {
            auto b = T.basis({n, t});
            S.set_dim({n, t}, b.size());
            for (std::size_t k = 0; k < b.size(); ++k)
                index[b[k]] = k;
            if (!b.empty())
                bases[{n, t}] = std::move(b);
        }
    for (const auto& [da, ba] : bases)
        for (const auto& [db, bb] : bases) {
            Bidegree c = da + db;
            if (!S.in_window(c) || S.dim(c) == 0)
                continue;
            for (std::size_t i = 0; i < ba.size(); ++i)
                for (std::size_t j = 0; j < bb.size(); ++j) {
                    Vector v = zero_vector(S.dim(c), S.field());
                    for (const auto& [k, x] : smash_multiply(T, ba[i], bb[j]))
                        v[index.at(k)] += x;
                    S.set_product(da, i, db, j, std::move(v));
                }
        }
    return S;
}

NotAFactorization::NotAFactorization(const Bidegree& b, const std::string& why)
    : std::runtime_error("not a factorization at bidegree " + to_string(b) + ": " + why), b_(b)
{
}

Matrix combined_multiplication(const BigradedAlgebra& C, const BigradedAlgebra&, const BigradedMap& fX,
                               const BigradedAlgebra&, const BigradedMap& fY, const std::vector<TensorKey>& basis,
                               const Bidegree& c)
{
    Matrix M(C.dim(c), basis.size(), C.field());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& key = basis[k];
        BiElement x{key.left, fX.block(key.left).column(key.i)};
        BiElement y{key.right, fY.block(key.right).column(key.j)};
        M.set_column(k, C.multiply(x, y).coords);
    }
    return M;
}

SmashTwist twist_from_factorization(const BigradedAlgebra& C, BigradedPtr X, const BigradedMap& fX, BigradedPtr Y,
                                    const BigradedMap& fY)
{
    SmashTwist T;
    T.X = X;
    T.Y = Y;
    for (int n = 0; n <= C.max_n(); ++n)
        for (int t = 0; t <= C.max_t(); ++t) {
            Bidegree c{n, t};
            if (!T.in_window(c))
                continue;
            auto basis = T.basis(c);
            Matrix M = combined_multiplication(C, *X, fX, *Y, fY, basis, c);
            if (M.rows() != M.cols())
                throw NotAFactorization(c, "dimension " + std::to_string(M.cols()) + " vs " +
                                               std::to_string(M.rows()));
            if (rank(M) != M.cols())
                throw NotAFactorization(c, "combined multiplication is singular");
            if (basis.empty())
                continue;
            LinearSolver solver(M);
            for (const auto& a : X->support())
                for (const auto& b : Y->support()) {
                    if (!(a + b == c))
                        continue;
                    for (std::size_t i = 0; i < X->dim(a); ++i)
                        for (std::size_t j = 0; j < Y->dim(b); ++j) {
                            BiElement y{b, fY.block(b).column(j)};
                            BiElement x{a, fX.block(a).column(i)};
                            auto s = solver.solve(C.multiply(y, x).coords);
                            TensorElement r;
                            for (std::size_t k = 0; k < basis.size(); ++k)
                                add_to(r, basis[k], (*s)[k]);
                            T.values[{b, j, a, i}] = std::move(r);
                        }
                }
        }
    T.status = SmashStatus::unchecked;
    return T;
}

BigradedAlgebra from_graded(const GradedAlgebra& A)
{
    const int D = A.max_degree();
    BigradedAlgebra G(A.field(), 0, D);
    for (int d = 0; d <= D; ++d)
        G.set_dim({0, d}, A.dim(d));
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b) {
            if (A.dim(a + b) == 0)
                continue;
            for (std::size_t i = 0; i < A.dim(a); ++i)
                for (std::size_t j = 0; j < A.dim(b); ++j) {
                    Vector v = zero_vector(A.dim(a + b), A.field());
                    for (const auto& e : A.basis_product(a, i, b, j))
                        v[e.col] = e.value;
                    G.set_product({0, a}, i, {0, b}, j, std::move(v));
                }
        }
    return G;
}

SmashTwist skew_twist(const SkewExtension& S, const BigradedPtr& A, const BigradedPtr& kz)
{
    SmashTwist T;
    T.X = A;
    T.Y = kz;
    const int D = A->max_t();
    const int l = S.z_degree;
    MorphismPtr sig = identity_morphism(S.base);
    for (int i = 0; i * l <= D; ++i) {
        for (int d = 0; d + i * l <= D; ++d) {
            const Matrix& m = sig->degree_matrix(d);
            for (std::size_t k = 0; k < A->dim({0, d}); ++k) {
                TensorElement r;
                Vector col = m.column(k);
                for (std::size_t q = 0; q < col.size(); ++q)
                    add_to(r, {{0, d}, q, {0, i * l}, 0}, col[q]);
                T.values[{{0, i * l}, 0, {0, d}, k}] = std::move(r);
            }
        }
        sig = compose(*S.sigma, *sig);
    }
    return T;
}

std::optional<std::string> check_skew_twist_against_extension(const SmashTwist& T, const SkewExtension& S)
{
    const GradedAlgebra& B = *S.extension;
    const int D = B.max_degree();
    const int l = S.z_degree;
    const int z = static_cast<int>(S.z_index);
    auto image = [&](const TensorKey& k) {
        NCPoly a = NCPoly::word(S.base->basis(k.left.t)[k.i], Scalar::one(B.field()));
        Word zi(static_cast<std::size_t>(k.right.t / l), z);
        return B.element(a * NCPoly::word(zi, Scalar::one(B.field())), k.degree().t);
    };
    auto image_of = [&](const TensorElement& x, int d) {
        AlgebraElement acc = B.zero(d);
        for (const auto& [k, c] : x) {
            auto e = image(k);
            for (std::size_t q = 0; q < e.coords.size(); ++q)
                acc.coords[q] += c * e.coords[q];
        }
        return acc;
    };
    for (int da = 0; da <= D; ++da) {
        auto basis_a = T.basis({0, da});
        // the map a (x) z^i -> a z^i must be bijective
        Matrix M(B.dim(da), basis_a.size(), B.field());
        for (std::size_t k = 0; k < basis_a.size(); ++k)
            M.set_column(k, image(basis_a[k]).coords);
        if (M.rows() != M.cols() || rank(M) != M.cols())
            return "a(x)z^i -> a*z^i is not bijective in degree " + std::to_string(da);
        for (int db = 0; da + db <= D; ++db)
            for (const auto& p : basis_a)
                for (const auto& q : T.basis({0, db})) {
                    auto lhs = image_of(smash_multiply(T, p, q), da + db);
                    auto rhs = B.multiply(image(p), image(q));
                    if (!(lhs.coords == rhs.coords))
                        return "product mismatch on " + tensor_str({{p, Scalar::one(B.field())}}) + " * " +
                               tensor_str({{q, Scalar::one(B.field())}});
                }
    }
    return std::nullopt;
}

}  // namespace skewext
