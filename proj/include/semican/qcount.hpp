#pragma once

// Point counts over F_q of subrepresentations and stable flags. Every fiber
// met here is paved by iterated Grassmannians, so the value at q = 1 is the
// Euler characteristic.

#include "semican/core.hpp"
#include "semican/qpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semican::qcount {

using core::DimVector;
using core::Orbit;
using core::PiModClass;

/// One grouped letter: the simple at `vertex` with multiplicity `mult`.
struct Letter {
    int vertex = 1;
    int mult = 1;

    auto operator<=>(const Letter&) const = default;
};

/// A monomial in the divided powers of the generators. The leftmost letter is
/// the innermost subrepresentation of the flag.
struct MonomialWord {
    std::vector<Letter> letters;

    DimVector content() const;
    std::string to_string() const;
    auto operator<=>(const MonomialWord&) const = default;

    /// Ungrouped word from a sequence of vertices, e.g. {2, 1, 1}.
    static MonomialWord from_vertices(const std::vector<int>& vertices);
};

template <typename Class>
struct StepCount {
    Class child;
    QPoly count;
};

struct ContentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Lines in the subrepresentation lattice isomorphic to the simple at `vertex`.
std::vector<StepCount<Orbit>> sub_simple_E(const Orbit& cls, int vertex);
std::vector<StepCount<PiModClass>> sub_simple_Pi(const PiModClass& cls, int vertex);

/// Subrepresentations isomorphic to b copies of the simple at `vertex`.
std::vector<StepCount<Orbit>> sub_grouped(const Orbit& cls, int vertex, int b);
std::vector<StepCount<PiModClass>> sub_grouped(const PiModClass& cls, int vertex, int b);

/// Memoized evaluator for a single word across many classes of one side.
template <typename Class>
class WordEvaluator {
public:
    explicit WordEvaluator(MonomialWord word) : word_(std::move(word)) {}

    const MonomialWord& word() const { return word_; }

    /// Stable-flag count of the whole word at `cls`.
    QPoly operator()(const Class& cls);

    /// Count for the suffix starting at letter `from`.
    QPoly suffix(std::size_t from, const Class& cls);

private:
    MonomialWord word_;
    std::map<std::pair<std::size_t, Class>, QPoly> memo_;
};

extern template class WordEvaluator<Orbit>;
extern template class WordEvaluator<PiModClass>;

/// Throws ContentError when the word content differs from the class dimension.
QPoly eval_word(const MonomialWord& word, const Orbit& cls);
QPoly eval_word(const MonomialWord& word, const PiModClass& cls);

/// Classes reached after peeling the first `prefix_len` letters, with multiplicities.
std::map<Orbit, QPoly> prefix_paths(const MonomialWord& word, std::size_t prefix_len, const Orbit& cls);
std::map<PiModClass, QPoly> prefix_paths(const MonomialWord& word, std::size_t prefix_len, const PiModClass& cls);

}  // namespace semican::qcount
