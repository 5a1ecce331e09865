#include "hyperexp/hyperlog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperexp/error.hpp"

namespace hyperexp {

void HyperlogWord::validate() const {
    if (!letters.empty() && letters.back() == 0)
        throw_domain("divergent innermost letter 0 in " + to_string());
}

std::string HyperlogWord::to_string() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    os << "I(z; ";
    for (std::size_t i = 0; i < letters.size(); ++i)
        os << (i ? "," : "") << hyperexp::to_string(letters[i]);
    os << ")";
    return os.str();
}

namespace {

void check_domain(double z, const HyperlogWord& word) {
    word.validate();
    if (!(z >= 0.0)) throw_domain("word evaluation needs z >= 0");
    for (const auto& a : word.letters) {
        double ad = to_double(a);
        if (ad > 0.0 && ad <= z)
            throw_domain("letter " + hyperexp::to_string(a) + " inside the integration range (0, " +
                         std::to_string(z) + "]");
    }
}

}  // namespace

const PanelFunc& WordEvaluator::panel_for(const std::vector<Rational>& suffix, double hi) {
    auto it = cache_.find(suffix);
    if (it != cache_.end() && it->second.hi >= hi) return it->second.f;

    QuadConfig cfg;
    cfg.tol = 0.1 * tol_;

    const double a_out = to_double(suffix.front());
    std::function<double(double)> integrand;
    if (suffix.size() == 1) {
        integrand = [a_out](double t) { return 1.0 / (t - a_out); };
    } else {
        std::vector<Rational> tail(suffix.begin() + 1, suffix.end());
        const PanelFunc& inner = panel_for(tail, hi);
        integrand = [a_out, &inner](double t) { return inner(t) / (t - a_out); };
    }
    PanelFunc f = PanelFunc::build(integrand, 0.0, hi, cfg).antiderivative();
    auto& entry = cache_[suffix];
    entry.f = std::move(f);
    entry.hi = hi;
    return entry.f;
}

double WordEvaluator::eval(const HyperlogWord& word, double x) {
    check_domain(x, word);
    if (word.empty()) return 1.0;
    if (x == 0.0) return 0.0;
    return panel_for(word.letters, x)(x);
}

double eval_word(double z, const HyperlogWord& word, double tol) {
    WordEvaluator ev(tol);
    return ev.eval(word, z);
}

std::vector<HyperlogWord> shuffle(const HyperlogWord& w1, const HyperlogWord& w2) {
    std::vector<HyperlogWord> out;
    std::vector<Rational> current;
    current.reserve(w1.letters.size() + w2.letters.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == w1.letters.size() && j == w2.letters.size()) {
            out.emplace_back(current);
            return;
        }
        if (i < w1.letters.size()) {
            current.push_back(w1.letters[i]);
            self(self, i + 1, j);
            current.pop_back();
        }
        if (j < w2.letters.size()) {
            current.push_back(w2.letters[j]);
            self(self, i, j + 1);
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

int HyperlogExpr::max_weight() const {
    int w = 0;
    for (const auto& t : terms) w = std::max(w, t.word.weight());
    return w;
}

HyperlogExpr& HyperlogExpr::operator+=(const HyperlogExpr& o) {
    for (const auto& t : o.terms) terms.push_back(t);
    normalize();
    return *this;
}

HyperlogExpr& HyperlogExpr::operator*=(const RationalFunction& f) {
    for (auto& t : terms) t.prefactor *= f;
    normalize();
    return *this;
}

void HyperlogExpr::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.word < b.word; });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().word == t.word) merged.back().prefactor += t.prefactor;
        else merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.prefactor.is_zero(); }),
                 merged.end());
    terms = std::move(merged);
}

std::string HyperlogExpr::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << "(" << terms[i].prefactor.to_string(variable) << ") * " << terms[i].word.to_string();
    }
    return os.str();
}

double eval_expr(const HyperlogExpr& expr, double z, const ParamMap& map, double /*tol*/,
                 WordEvaluator& evaluator) {
    double xi = map.xi_of_z(z);
    double t = (expr.variable == "1-xi") ? 1.0 - xi : xi;
    double s = 0.0;
    for (const auto& term : expr.terms)
        s += term.prefactor.eval(t) * evaluator.eval(term.word, t);
    return s;
}

double eval_expr(const HyperlogExpr& expr, double z, const ParamMap& map, double tol) {
    WordEvaluator ev(tol);
    return eval_expr(expr, z, map, tol, ev);
}

}  // namespace hyperexp
