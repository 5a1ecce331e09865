#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperexp/parammap.hpp"
#include "hyperexp/quadrature.hpp"
#include "hyperexp/rational.hpp"
#include "hyperexp/rational_function.hpp"

namespace hyperexp {

/// Letter word (a_k, ..., a_1) of an iterated integral, outermost letter
/// first; the weight is the length. A nonempty word must not end in 0 (the
/// innermost integral would diverge at the basepoint).
struct HyperlogWord {
    std::vector<Rational> letters;

    HyperlogWord() = default;
    explicit HyperlogWord(std::vector<Rational> l) : letters(std::move(l)) {}

    int weight() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    void validate() const;

    friend bool operator==(const HyperlogWord& a, const HyperlogWord& b) {
        return a.letters == b.letters;
    }
    friend bool operator<(const HyperlogWord& a, const HyperlogWord& b) {
        return a.letters < b.letters;
    }

    /// "I(z; a_k,...,a_1)"; the empty word prints as "1".
    std::string to_string() const;
};

/// I_k(z; a_k,...,a_1) by nested quadrature over the one-forms dt/(t-a).
/// Precondition: z >= 0 and no letter inside (0, z] (principal values are out
/// of scope); the empty word evaluates to 1.
double eval_word(double z, const HyperlogWord& word, double tol);

/// All riffle interleavings of w1 and w2 preserving internal order;
/// count = C(|w1|+|w2|, |w1|), duplicates kept with multiplicity.
std::vector<HyperlogWord> shuffle(const HyperlogWord& w1, const HyperlogWord& w2);

/// Word evaluator with a panel cache shared across words: each word's
/// innermost-to-outermost interpolants are memoized by letter suffix, so
/// expressions reuse everything their words have in common.
class WordEvaluator {
  public:
    explicit WordEvaluator(double tol) : tol_(tol) {}
    double eval(const HyperlogWord& word, double x);

  private:
    const PanelFunc& panel_for(const std::vector<Rational>& suffix, double hi);
    struct Entry {
        PanelFunc f;
        double hi = 0.0;
    };
    double tol_;
    std::map<std::vector<Rational>, Entry> cache_;
};

/// Linear combination of words with rational-function prefactors in the
/// map variable; the empty word carries pure rational terms.
struct HyperlogExpr {
    struct Term {
        RationalFunction prefactor;
        HyperlogWord word;
    };
    std::vector<Term> terms;
    std::string variable = "xi";  ///< "xi" or "1-xi": evaluation variable of prefactors and words

    bool empty() const { return terms.empty(); }
    int max_weight() const;

    HyperlogExpr& operator+=(const HyperlogExpr& o);
    HyperlogExpr& operator*=(const RationalFunction& f);

    /// Merge duplicate words, drop vanishing prefactors; terms sorted by word.
    void normalize();

    std::string to_string() const;
};

/// Sum of prefactor(t) * I(t; word) at t derived from xi(z) via the
/// expression's variable tag.
double eval_expr(const HyperlogExpr& expr, double z, const ParamMap& map, double tol);

/// As above with a caller-provided evaluator (to share word panels across
/// expressions and z points).
double eval_expr(const HyperlogExpr& expr, double z, const ParamMap& map, double tol,
                 WordEvaluator& evaluator);

}  // namespace hyperexp
