#include "skewext/groebner.hpp"

#include <algorithm>
#include <map>

namespace skewext {

namespace {

struct OrderLess {
    const MonomialOrder* ord;
    bool operator()(const Word& a, const Word& b) const { return ord->less(a, b); }
};

bool has_suffix_in(const Word& w, const std::vector<Word>& leading)
{
    for (const auto& l : leading)
        if (l.size() <= w.size() && std::equal(l.rbegin(), l.rend(), w.rbegin()))
            return true;
    return false;
}

}  // namespace

NCPoly reduce(const NCPoly& f, const std::vector<NCPoly>& basis, const std::vector<Word>& leading,
              const MonomialOrder& ord)
{
    std::map<Word, Scalar, OrderLess> work(OrderLess{&ord});
    for (const auto& [w, c] : f.terms())
        work.emplace(w, c);
    NCPoly result;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        Scalar c = top->second;
        work.erase(top);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size() && !reduced; ++i) {
            long pos = find_subword(w, leading[i]);
            if (pos < 0)
                continue;
            reduced = true;
            Word left(w.begin(), w.begin() + pos);
            Word right(w.begin() + pos + static_cast<long>(leading[i].size()), w.end());
            for (const auto& [u, d] : basis[i].terms()) {
                if (u == leading[i])
                    continue;
                Word nw = concat(concat(left, u), right);
                Scalar delta = -(c * d);
                auto [it, inserted] = work.emplace(nw, delta);
                if (!inserted) {
                    it->second += delta;
                    if (it->second.is_zero())
                        work.erase(it);
                }
            }
        }
        if (!reduced)
            result.add_term(w, c);
    }
    return result;
}

std::vector<Overlap> overlaps(const std::vector<NCPoly>& basis, const std::vector<Word>& leading)
{
    std::vector<Overlap> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Word& a = leading[i];
            const Word& b = leading[j];
            std::size_t max_k = std::min(a.size(), b.size());
            for (std::size_t k = 1; k <= max_k; ++k) {
                if (k == a.size() || k == b.size())
                    continue;  // inclusions are excluded by inter-reduction
                if (!std::equal(a.end() - static_cast<long>(k), a.end(), b.begin()))
                    continue;
                Word u(a.begin(), a.end() - static_cast<long>(k));
                Word w(b.begin() + static_cast<long>(k), b.end());
                NCPoly s = basis[i] * NCPoly::word(w) - NCPoly::word(u) * basis[j];
                out.push_back({i, j, concat(a, w), std::move(s)});
            }
        }
    }
    return out;
}

GroebnerBasis buchberger_truncated(const Presentation& p, const MonomialOrder& ord, int max_degree)
{
    GroebnerBasis gb;
    gb.truncation = max_degree;
    const auto degs = p.degrees();

    for (int d = 1; d <= max_degree; ++d) {
        std::vector<NCPoly> candidates;
        for (const auto& r : p.relations())
            if (r.homogeneous_degree(degs) == d)
                candidates.push_back(r);
        for (auto& o : overlaps(gb.elements, gb.leading))
            if (word_degree(o.word, degs) == d)
                candidates.push_back(std::move(o.spoly));

        std::size_t first_new = gb.elements.size();
        for (const auto& c : candidates) {
            NCPoly r = reduce(c, gb.elements, gb.leading, ord);
            if (r.is_zero())
                continue;
            r = r.monic(ord);
            gb.leading.push_back(r.leading_word(ord));
            gb.elements.push_back(std::move(r));
        }
        // inter-reduce the tails of this degree's new elements
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = first_new; i < gb.elements.size(); ++i) {
                std::vector<NCPoly> others;
                std::vector<Word> others_lead;
                for (std::size_t j = 0; j < gb.elements.size(); ++j) {
                    if (j == i)
                        continue;
                    others.push_back(gb.elements[j]);
                    others_lead.push_back(gb.leading[j]);
                }
                NCPoly r = reduce(gb.elements[i], others, others_lead, ord);
                if (!(r == gb.elements[i])) {
                    gb.elements[i] = std::move(r);
                    changed = true;
                }
            }
        }
        gb.complete_through = d;
    }
    gb.complete_through = max_degree;

    gb.globally_complete = true;
    for (const auto& o : overlaps(gb.elements, gb.leading))
        if (word_degree(o.word, degs) > max_degree)
            gb.globally_complete = false;
    return gb;
}

std::vector<std::size_t> count_normal_words(const std::vector<Word>& leading, const std::vector<int>& degrees,
                                            int max_degree)
{
    // normal words of degree d are w*g with w normal and no leading word as a suffix
    std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(max_degree) + 1);
    by_degree[0].push_back({});
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_degree) + 1, 0);
    counts[0] = 1;
    for (int d = 1; d <= max_degree; ++d) {
        for (std::size_t g = 0; g < degrees.size(); ++g) {
            int prev = d - degrees[g];
            if (prev < 0)
                continue;
            for (const auto& w : by_degree[static_cast<std::size_t>(prev)]) {
                Word nw = w;
                nw.push_back(static_cast<int>(g));
                if (!has_suffix_in(nw, leading))
                    by_degree[static_cast<std::size_t>(d)].push_back(std::move(nw));
            }
        }
        counts[static_cast<std::size_t>(d)] = by_degree[static_cast<std::size_t>(d)].size();
    }
    return counts;
}

}  // namespace skewext
