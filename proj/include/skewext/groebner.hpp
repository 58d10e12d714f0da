#pragma once

#include <vector>

#include "skewext/presentation.hpp"
#include "skewext/word.hpp"

namespace skewext {

/// Degree-truncated reduced Groebner basis of the two-sided ideal of relations.
struct GroebnerBasis {
    std::vector<NCPoly> elements;  ///< monic, inter-reduced, sorted by degree
    std::vector<Word> leading;     ///< leading word of each element
    int truncation = 0;            ///< D
    int complete_through = 0;      ///< every overlap of degree <= this reduces to zero
    /// True when no overlap of the final basis exceeds the truncation, so the
    /// basis is a Groebner basis of the whole ideal.
    bool globally_complete = false;
};

GroebnerBasis buchberger_truncated(const Presentation& p, const MonomialOrder& ord, int max_degree);

/// Full rewriting of `f` modulo the basis; no word of the result contains a leading word.
NCPoly reduce(const NCPoly& f, const std::vector<NCPoly>& basis, const std::vector<Word>& leading,
              const MonomialOrder& ord);

/// Ambiguities (overlaps) between leading words a = uv and b = vw with v nonempty
/// and proper; returned as the S-polynomial f*w - u*g.
struct Overlap {
    std::size_t first;
    std::size_t second;
    Word word;
    NCPoly spoly;
};
std::vector<Overlap> overlaps(const std::vector<NCPoly>& basis, const std::vector<Word>& leading);

/// Number of normal words (words avoiding every leading word) in each degree 0..max_degree.
std::vector<std::size_t> count_normal_words(const std::vector<Word>& leading, const std::vector<int>& degrees,
                                            int max_degree);

}  // namespace skewext
