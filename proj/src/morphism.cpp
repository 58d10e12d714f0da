#include "skewext/morphism.hpp"

#include <algorithm>

namespace skewext {

RelationNotPreserved::RelationNotPreserved(const std::string& relation, const std::string& image)
    : std::runtime_error("relation not preserved: " + relation + " maps to " + image), relation_(relation)
{
}

namespace {

// Product of generator images along a word, computed in `target`.
AlgebraElement evaluate_word(const Word& w, const std::vector<AlgebraElement>& gen_images, const GradedAlgebra& target)
{
    AlgebraElement acc = target.one();
    for (int g : w)
        acc = target.multiply(acc, gen_images[static_cast<std::size_t>(g)]);
    return acc;
}

}  // namespace

MorphismPtr check_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images, bool automorphism)
{
    const auto& sp = source->presentation();
    if (images.size() != sp.num_generators())
        throw std::invalid_argument("morphism needs one image per source generator");
    if (!(source->field() == target->field()))
        throw std::invalid_argument("morphism between algebras over different fields");
    auto tdegs = target->presentation().degrees();

    std::shared_ptr<GradedMorphism> m(new GradedMorphism());
    m->source_ = source;
    m->target_ = target;
    m->automorphism_ = automorphism;
    m->max_degree_ = std::min(source->max_degree(), target->max_degree());

    std::vector<AlgebraElement> gen_images;
    for (std::size_t g = 0; g < images.size(); ++g) {
        int d = sp.generators()[g].degree;
        int hd = images[g].homogeneous_degree(tdegs);
        if (!images[g].is_zero() && hd != d)
            throw std::invalid_argument("image of generator '" + sp.generators()[g].name +
                                        "' is not homogeneous of degree " + std::to_string(d));
        if (d > m->max_degree_) {
            gen_images.push_back({d, {}});
            continue;
        }
        gen_images.push_back(target->element(images[g], d));
        images[g] = target->to_poly(gen_images.back());
    }
    m->images_ = images;

    auto sdegs = sp.degrees();
    for (const auto& r : sp.relations()) {
        int d = r.homogeneous_degree(sdegs);
        if (d > m->max_degree_)
            continue;
        AlgebraElement img = target->zero(d);
        for (const auto& [w, c] : r.terms()) {
            AlgebraElement t = evaluate_word(w, gen_images, *target);
            for (std::size_t i = 0; i < t.coords.size(); ++i)
                img.coords[i] += c * t.coords[i];
        }
        if (!img.is_zero())
            throw RelationNotPreserved(r.str(sp.names()), target->to_poly(img).str(target->presentation().names()));
    }

    // matrices degree by degree; a normal word's prefix is normal, so images
    // are built from images of shorter words
    std::vector<std::vector<AlgebraElement>> word_images(static_cast<std::size_t>(m->max_degree_) + 1);
    for (int d = 0; d <= m->max_degree_; ++d) {
        const auto& basis = source->basis(d);
        Matrix mat(target->dim(d), basis.size(), target->field());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Word& w = basis[i];
            AlgebraElement img = target->one();
            if (!w.empty()) {
                Word prefix(w.begin(), w.end() - 1);
                int pd = d - sdegs[static_cast<std::size_t>(w.back())];
                const auto& pimg = word_images[static_cast<std::size_t>(pd)][*source->index_of(prefix)];
                img = target->multiply(pimg, gen_images[static_cast<std::size_t>(w.back())]);
            }
            mat.set_column(i, img.coords);
            word_images[static_cast<std::size_t>(d)].push_back(std::move(img));
        }
        m->matrices_.push_back(std::move(mat));
    }

    if (automorphism) {
        if (source.get() != target.get() && !(source->presentation() == target->presentation()))
            throw NotInvertible("an automorphism must have equal source and target");
        for (int d = 0; d <= m->max_degree_; ++d) {
            const Matrix& mat = m->matrices_[static_cast<std::size_t>(d)];
            if (rank(mat) != mat.cols() || mat.rows() != mat.cols())
                throw NotInvertible("map is not invertible in degree " + std::to_string(d));
        }
        for (std::size_t g = 0; g < images.size(); ++g) {
            int d = sp.generators()[g].degree;
            if (d > m->max_degree_) {
                m->inverse_images_.push_back(NCPoly());
                continue;
            }
            AlgebraElement gen = source->generator(g);
            auto x = solve(m->matrices_[static_cast<std::size_t>(d)], gen.coords);
            if (!x)
                throw NotInvertible("cannot invert on generator " + sp.generators()[g].name);
            m->inverse_images_.push_back(source->to_poly({d, *x}));
        }
    }
    return m;
}

const Matrix& GradedMorphism::degree_matrix(int d) const
{
    if (d < 0 || d > max_degree_)
        throw TruncationError("morphism degree " + std::to_string(d) + " outside certified range");
    return matrices_[static_cast<std::size_t>(d)];
}

AlgebraElement GradedMorphism::apply(const AlgebraElement& a) const
{
    return {a.degree, degree_matrix(a.degree).apply(a.coords)};
}

NCPoly GradedMorphism::apply(const NCPoly& f) const
{
    NCPoly out;
    for (const auto& [w, c] : f.terms()) {
        NCPoly t = NCPoly::constant(c);
        for (int g : w)
            t = t * images_[static_cast<std::size_t>(g)];
        out += t;
    }
    return out;
}

const std::vector<NCPoly>& GradedMorphism::inverse_images() const
{
    if (!automorphism_)
        throw std::logic_error("inverse requested for a non-automorphism");
    return inverse_images_;
}

MorphismPtr GradedMorphism::inverse() const
{
    return check_morphism(target_, source_, inverse_images(), true);
}

bool GradedMorphism::equals(const GradedMorphism& o) const
{
    if (images_.size() != o.images_.size())
        return false;
    for (std::size_t g = 0; g < images_.size(); ++g) {
        int d = source_->presentation().generators()[g].degree;
        if (d > max_degree_ || d > o.max_degree_)
            continue;
        if (!(target_->element(images_[g], d).coords == o.target_->element(o.images_[g], d).coords))
            return false;
    }
    return true;
}

MorphismPtr identity_morphism(const AlgebraPtr& a)
{
    std::vector<NCPoly> imgs;
    for (std::size_t g = 0; g < a->num_generators(); ++g)
        imgs.push_back(NCPoly::generator(static_cast<int>(g)) * Scalar::one(a->field()));
    return check_morphism(a, a, imgs, true);
}

MorphismPtr compose(const GradedMorphism& outer, const GradedMorphism& inner)
{
    if (inner.target().get() != outer.source().get())
        throw std::invalid_argument("compose: target of inner map is not the source of outer map");
    std::vector<NCPoly> imgs;
    const auto& sp = inner.source()->presentation();
    for (std::size_t g = 0; g < inner.images().size(); ++g) {
        int d = sp.generators()[g].degree;
        if (d > inner.max_degree() || d > outer.max_degree()) {
            imgs.push_back(NCPoly());
            continue;
        }
        AlgebraElement mid = inner.target()->element(inner.images()[g], d);
        imgs.push_back(outer.target()->to_poly(outer.apply(mid)));
    }
    bool autom = inner.is_automorphism() && outer.is_automorphism();
    return check_morphism(inner.source(), outer.target(), imgs, autom);
}

MorphismPtr power(const GradedMorphism& sigma, unsigned n)
{
    MorphismPtr r = identity_morphism(sigma.source());
    for (unsigned i = 0; i < n; ++i)
        r = compose(sigma, *r);
    return r;
}

Presentation skew_extension(const Presentation& a, const std::vector<NCPoly>& sigma, int z_degree,
                            const std::string& z_name)
{
    if (z_degree < 1)
        throw std::invalid_argument("deg z must be at least 1");
    if (sigma.size() != a.num_generators())
        throw std::invalid_argument("automorphism needs one image per generator");
    if (a.generator_index(z_name))
        throw std::invalid_argument("generator name '" + z_name + "' already used");
    auto gens = a.generators();
    gens.push_back({z_name, z_degree});
    int z = static_cast<int>(a.num_generators());
    auto rels = a.relations();
    for (std::size_t g = 0; g < sigma.size(); ++g) {
        NCPoly r = NCPoly::word({z, static_cast<int>(g)}) - sigma[g] * NCPoly::generator(z);
        rels.push_back(r);
    }
    return Presentation(a.field(), gens, rels);
}

SkewExtension make_skew_extension(const AlgebraPtr& base, const MorphismPtr& sigma, int z_degree,
                                  const std::string& z_name)
{
    Presentation bp = skew_extension(base->presentation(), sigma->images(), z_degree, z_name);
    // z largest, so normal words are (normal word of A) * z^i
    std::vector<int> prec{static_cast<int>(base->num_generators())};
    for (int g : base->order().precedence())
        prec.push_back(g);
    return make_skew_extension(base, sigma, z_degree, z_name, MonomialOrder(bp.degrees(), prec));
}

SkewExtension make_skew_extension(const AlgebraPtr& base, const MorphismPtr& sigma, int z_degree,
                                  const std::string& z_name, const MonomialOrder& extension_order)
{
    if (!sigma->is_automorphism() || sigma->source().get() != base.get())
        throw std::invalid_argument("sigma must be a certified automorphism of the base algebra");
    SkewExtension s;
    s.base = base;
    s.sigma = sigma;
    s.z_degree = z_degree;
    s.z_index = base->num_generators();
    const int D = base->max_degree();
    Presentation bp = skew_extension(base->presentation(), sigma->images(), z_degree, z_name);
    s.extension = std::make_shared<GradedAlgebra>(bp, extension_order, D);
    Presentation kz(base->field(), {{z_name, z_degree}}, {});
    s.polynomial = std::make_shared<GradedAlgebra>(kz, D);

    const Scalar one = Scalar::one(base->field());
    const int z = static_cast<int>(s.z_index);
    std::vector<NCPoly> iota_a, pi_a, pi_z;
    for (std::size_t g = 0; g < base->num_generators(); ++g) {
        iota_a.push_back(NCPoly::generator(static_cast<int>(g)) * one);
        pi_a.push_back(NCPoly::generator(static_cast<int>(g)) * one);
        pi_z.push_back(NCPoly());
    }
    pi_a.push_back(NCPoly());
    pi_z.push_back(NCPoly::generator(0) * one);
    s.iota_A = check_morphism(base, s.extension, iota_a);
    s.iota_z = check_morphism(s.polynomial, s.extension, {NCPoly::generator(z) * one});
    s.pi_A = check_morphism(s.extension, base, pi_a);
    s.pi_z = check_morphism(s.extension, s.polynomial, pi_z);
    return s;
}

}  // namespace skewext
