#include "skewext/graded_algebra.hpp"

#include <algorithm>

namespace skewext {

GradedAlgebra::GradedAlgebra(Presentation p, int max_degree)
    : GradedAlgebra(p, p.default_order(), max_degree)
{
}

GradedAlgebra::GradedAlgebra(Presentation p, MonomialOrder ord, int max_degree)
    : pres_(std::move(p)), ord_(std::move(ord)), max_degree_(max_degree)
{
    if (max_degree_ < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
    if (ord_.degrees() != pres_.degrees())
        throw std::invalid_argument("monomial order does not match the generator degrees");
    build();
}

void GradedAlgebra::build()
{
    gb_ = buchberger_truncated(pres_, ord_, max_degree_);
    const auto degs = pres_.degrees();
    const auto D = static_cast<std::size_t>(max_degree_);

    basis_.assign(D + 1, {});
    basis_[0].push_back({});
    for (std::size_t d = 1; d <= D; ++d) {
        for (std::size_t g = 0; g < degs.size(); ++g) {
            int prev = static_cast<int>(d) - degs[g];
            if (prev < 0)
                continue;
            for (const auto& w : basis_[static_cast<std::size_t>(prev)]) {
                Word nw = w;
                nw.push_back(static_cast<int>(g));
                bool normal = true;
                for (const auto& l : gb_.leading)
                    if (l.size() <= nw.size() && std::equal(l.rbegin(), l.rend(), nw.rbegin()))
                        normal = false;
                if (normal)
                    basis_[d].push_back(std::move(nw));
            }
        }
        // largest word first
        std::sort(basis_[d].begin(), basis_[d].end(), [this](const Word& a, const Word& b) { return ord_.less(b, a); });
    }
    for (const auto& level : basis_)
        for (std::size_t i = 0; i < level.size(); ++i)
            index_.emplace(level[i], i);

    products_.assign(D + 1, {});
    for (std::size_t da = 0; da <= D; ++da) {
        products_[da].resize(D + 1 - da);
        for (std::size_t db = 0; da + db <= D; ++db) {
            auto& table = products_[da][db];
            table.resize(basis_[da].size() * basis_[db].size());
            for (std::size_t i = 0; i < basis_[da].size(); ++i) {
                for (std::size_t j = 0; j < basis_[db].size(); ++j) {
                    Word w = concat(basis_[da][i], basis_[db][j]);
                    NCPoly nf = reduce(NCPoly::word(w, Scalar::one(field())), gb_.elements, gb_.leading, ord_);
                    SparseRow row;
                    for (const auto& [u, c] : nf.terms())
                        row.push_back({index_.at(u), c});
                    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
                    table[i * basis_[db].size() + j] = std::move(row);
                }
            }
        }
    }
}

void GradedAlgebra::check_degree(int d) const
{
    if (d > max_degree_)
        throw TruncationError("degree " + std::to_string(d) + " exceeds the truncation degree " +
                              std::to_string(max_degree_));
}

std::size_t GradedAlgebra::dim(int d) const
{
    if (d < 0)
        return 0;
    check_degree(d);
    return basis_[static_cast<std::size_t>(d)].size();
}

const std::vector<Word>& GradedAlgebra::basis(int d) const
{
    static const std::vector<Word> empty;
    if (d < 0)
        return empty;
    check_degree(d);
    return basis_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> GradedAlgebra::index_of(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::size_t> GradedAlgebra::hilbert() const
{
    std::vector<std::size_t> h;
    for (const auto& b : basis_)
        h.push_back(b.size());
    return h;
}

GradedAlgebra::NormalForm GradedAlgebra::normal_form(const NCPoly& f) const
{
    bool certified = true;
    for (const auto& [w, c] : f.terms())
        if (ord_.degree(w) > gb_.complete_through)
            certified = false;
    NCPoly tagged;
    for (const auto& [w, c] : f.terms())
        tagged.add_term(w, Scalar(c.value(), field()));
    return {reduce(tagged, gb_.elements, gb_.leading, ord_), certified || gb_.globally_complete};
}

AlgebraElement GradedAlgebra::zero(int d) const
{
    return {d, zero_vector(dim(d), field())};
}

AlgebraElement GradedAlgebra::one() const
{
    return {0, Vector{Scalar::one(field())}};
}

AlgebraElement GradedAlgebra::generator(std::size_t g) const
{
    int d = pres_.generators().at(g).degree;
    return element(NCPoly::generator(static_cast<int>(g)), d);
}

AlgebraElement GradedAlgebra::element(const NCPoly& f, int d) const
{
    check_degree(d);
    AlgebraElement a = zero(d);
    NCPoly nf = normal_form(f).value;
    for (const auto& [w, c] : nf.terms()) {
        if (ord_.degree(w) != d)
            throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(d));
        a.coords[index_.at(w)] += c;
    }
    return a;
}

NCPoly GradedAlgebra::to_poly(const AlgebraElement& a) const
{
    NCPoly p;
    const auto& b = basis(a.degree);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        p.add_term(b[i], a.coords[i]);
    return p;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const
{
    int d = a.degree + b.degree;
    check_degree(d);
    AlgebraElement r = zero(d);
    const auto& table = products_[static_cast<std::size_t>(a.degree)][static_cast<std::size_t>(b.degree)];
    std::size_t nb = b.coords.size();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i].is_zero())
            continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b.coords[j].is_zero())
                continue;
            Scalar c = a.coords[i] * b.coords[j];
            for (const auto& e : table[i * nb + j])
                r.coords[e.col] += c * e.value;
        }
    }
    return r;
}

const SparseRow& GradedAlgebra::basis_product(int da, std::size_t i, int db, std::size_t j) const
{
    check_degree(da + db);
    return products_[static_cast<std::size_t>(da)][static_cast<std::size_t>(db)][i * dim(db) + j];
}

}  // namespace skewext
