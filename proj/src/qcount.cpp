#include "semican/qcount.hpp"

#include <algorithm>

namespace semican::qcount {

DimVector MonomialWord::content() const {
    DimVector d;
    for (const auto& l : letters) (l.vertex == 1 ? d.d1 : d.d2) += l.mult;
    return d;
}

std::string MonomialWord::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(letters[k].vertex);
        if (letters[k].mult != 1) out += "^" + std::to_string(letters[k].mult);
    }
    return out + "]";
}

MonomialWord MonomialWord::from_vertices(const std::vector<int>& vertices) {
    MonomialWord w;
    for (int v : vertices) w.letters.push_back(Letter{v, 1});
    return w;
}

namespace {

void check_vertex(int vertex) {
    if (vertex != 1 && vertex != 2) throw std::invalid_argument("vertex must be 1 or 2");
}

template <typename Class>
void push_nonzero(std::vector<StepCount<Class>>& out, Class child, QPoly count) {
    if (!count.is_zero()) out.push_back(StepCount<Class>{child, std::move(count)});
}

// Subspaces U of dimension b inside an ambient space of dimension `ambient`
// that meets a fixed subspace of dimension `special` in dimension t, for t
// from high to low. The callback receives (t, count).
template <typename F>
void split_by_intersection(int ambient, int special, int b, F&& emit) {
    const int lo = std::max(0, b - (ambient - special));
    const int hi = std::min(b, special);
    for (int t = hi; t >= lo; --t)
        emit(t, gauss_binom(special, t) * gauss_binom(ambient - special, b - t) *
                    QPoly::monomial((special - t) * (b - t)));
}

}  // namespace

std::vector<StepCount<Orbit>> sub_simple_E(const Orbit& cls, int vertex) {
    core::validate(cls);
    check_vertex(vertex);
    const auto [d1, d2] = cls.dim;
    const int r = cls.r;
    std::vector<StepCount<Orbit>> out;
    if (vertex == 1) {
        if (d1 == 0) return out;
        // a line of V_1 is a subrepresentation iff it lies in ker x
        push_nonzero(out, Orbit{{d1 - 1, d2}, r}, gauss_integer(d1 - r));
    } else {
        if (d2 == 0) return out;
        push_nonzero(out, Orbit{{d1, d2 - 1}, r - 1}, gauss_integer(r));
        push_nonzero(out, Orbit{{d1, d2 - 1}, r}, gauss_integer(d2) - gauss_integer(r));
    }
    return out;
}

std::vector<StepCount<PiModClass>> sub_simple_Pi(const PiModClass& cls, int vertex) {
    core::validate(cls);
    check_vertex(vertex);
    const auto [d1, d2] = cls.dim;
    const int r = cls.r, s = cls.s;
    std::vector<StepCount<PiModClass>> out;
    if (vertex == 1) {
        if (d1 == 0) return out;
        // lines in ker x; im y sits inside ker x because xy = 0
        push_nonzero(out, PiModClass{{d1 - 1, d2}, r, s - 1}, gauss_integer(s));
        push_nonzero(out, PiModClass{{d1 - 1, d2}, r, s}, gauss_integer(d1 - r) - gauss_integer(s));
    } else {
        if (d2 == 0) return out;
        // lines in ker y; im x sits inside ker y because yx = 0
        push_nonzero(out, PiModClass{{d1, d2 - 1}, r - 1, s}, gauss_integer(r));
        push_nonzero(out, PiModClass{{d1, d2 - 1}, r, s}, gauss_integer(d2 - s) - gauss_integer(r));
    }
    return out;
}

std::vector<StepCount<Orbit>> sub_grouped(const Orbit& cls, int vertex, int b) {
    core::validate(cls);
    check_vertex(vertex);
    const auto [d1, d2] = cls.dim;
    const int r = cls.r;
    std::vector<StepCount<Orbit>> out;
    if (b < 0) return out;
    if (vertex == 1) {
        if (b > d1) return out;
        push_nonzero(out, Orbit{{d1 - b, d2}, r}, gauss_binom(d1 - r, b));
    } else {
        if (b > d2) return out;
        split_by_intersection(d2, r, b, [&](int t, QPoly count) {
            push_nonzero(out, Orbit{{d1, d2 - b}, r - t}, std::move(count));
        });
    }
    return out;
}

std::vector<StepCount<PiModClass>> sub_grouped(const PiModClass& cls, int vertex, int b) {
    core::validate(cls);
    check_vertex(vertex);
    const auto [d1, d2] = cls.dim;
    const int r = cls.r, s = cls.s;
    std::vector<StepCount<PiModClass>> out;
    if (b < 0) return out;
    if (vertex == 1) {
        if (b > d1) return out;
        // U inside ker x (dim d1 - r), split by its intersection with im y (dim s)
        split_by_intersection(d1 - r, s, b, [&](int t, QPoly count) {
            push_nonzero(out, PiModClass{{d1 - b, d2}, r, s - t}, std::move(count));
        });
    } else {
        if (b > d2) return out;
        split_by_intersection(d2 - s, r, b, [&](int t, QPoly count) {
            push_nonzero(out, PiModClass{{d1, d2 - b}, r - t, s}, std::move(count));
        });
    }
    return out;
}

namespace {

bool is_empty_dim(const Orbit& c) { return c.dim.d1 == 0 && c.dim.d2 == 0; }
bool is_empty_dim(const PiModClass& c) { return c.dim.d1 == 0 && c.dim.d2 == 0; }

DimVector class_dim(const Orbit& c) { return c.dim; }
DimVector class_dim(const PiModClass& c) { return c.dim; }

template <typename Class>
auto peel(const Class& cls, const Letter& letter) {
    if (letter.mult == 1) {
        if constexpr (std::is_same_v<Class, Orbit>)
            return sub_simple_E(cls, letter.vertex);
        else
            return sub_simple_Pi(cls, letter.vertex);
    }
    return sub_grouped(cls, letter.vertex, letter.mult);
}

template <typename Class>
void check_content(const MonomialWord& word, const Class& cls) {
    for (const auto& l : word.letters)
        if (l.mult < 1 || (l.vertex != 1 && l.vertex != 2))
            throw ContentError("malformed letter in word " + word.to_string());
    if (word.content() != class_dim(cls))
        throw ContentError("word " + word.to_string() + " has content " + core::to_string(word.content()) +
                           " but the class has dimension " + core::to_string(class_dim(cls)));
}

template <typename Class>
std::map<Class, QPoly> prefix_paths_impl(const MonomialWord& word, std::size_t prefix_len, const Class& cls) {
    std::map<Class, QPoly> frontier{{cls, QPoly(1)}};
    for (std::size_t k = 0; k < prefix_len && k < word.letters.size(); ++k) {
        std::map<Class, QPoly> next;
        for (const auto& [c, mult] : frontier)
            for (auto& step : peel(c, word.letters[k])) next[step.child] += mult * step.count;
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace

template <typename Class>
QPoly WordEvaluator<Class>::suffix(std::size_t from, const Class& cls) {
    if (from == word_.letters.size()) return is_empty_dim(cls) ? QPoly(1) : QPoly();
    const auto key = std::pair{from, cls};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QPoly total;
    for (const auto& step : peel(cls, word_.letters[from])) total += step.count * suffix(from + 1, step.child);
    memo_.emplace(key, total);
    return total;
}

template <typename Class>
QPoly WordEvaluator<Class>::operator()(const Class& cls) {
    check_content(word_, cls);
    return suffix(0, cls);
}

template class WordEvaluator<Orbit>;
template class WordEvaluator<PiModClass>;

QPoly eval_word(const MonomialWord& word, const Orbit& cls) { return WordEvaluator<Orbit>(word)(cls); }

QPoly eval_word(const MonomialWord& word, const PiModClass& cls) { return WordEvaluator<PiModClass>(word)(cls); }

std::map<Orbit, QPoly> prefix_paths(const MonomialWord& word, std::size_t prefix_len, const Orbit& cls) {
    return prefix_paths_impl(word, prefix_len, cls);
}

std::map<PiModClass, QPoly> prefix_paths(const MonomialWord& word, std::size_t prefix_len, const PiModClass& cls) {
    return prefix_paths_impl(word, prefix_len, cls);
}

}  // namespace semican::qcount
