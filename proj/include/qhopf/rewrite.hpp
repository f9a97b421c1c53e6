#pragma once

// Rewriting engine: oriented rules (lhs word -> smaller element), linear
// normal-form reduction with traces, rule-set construction from relations
// (orientation + inter-reduction), bounded overlap completion and a
// critical-pair confluence certificate.  When every critical pair resolves,
// normal forms are canonical representatives in the quotient and element
// equality modulo the ideal is normal-form equality.

#include "qhopf/presentation.hpp"

#include <cstdint>
#include <deque>

namespace qhopf {

struct ReductionStep {
    int rule = -1;
    int pos = 0;
    Word before;  // the word rewritten at this step
};

struct ReductionTrace {
    Element input;
    std::vector<ReductionStep> steps;
    Element output;
    bool fixpoint = true;
};

struct RewriteLimits {
    size_t step_cap = 2'000'000;
    size_t rule_cap = 4000;
    size_t lhs_len_cap = 6;
    size_t pair_cap = 400'000;
};

// first (rule, position) match on w: leftmost position, lowest rule index
inline bool find_match(const Presentation& P, const Word& w, int& rule, int& pos) {
    for (size_t p = 0; p < w.size(); ++p) {
        for (size_t r = 0; r < P.rules.size(); ++r) {
            const Word& l = P.rules[r].lhs;
            if (l.size() > w.size() - p) continue;
            if (w.compare(p, l.size(), l) == 0) {
                rule = static_cast<int>(r);
                pos = static_cast<int>(p);
                return true;
            }
        }
    }
    return false;
}

// normal form; each step replaces the largest reducible word by strictly
// smaller words, so termination follows from the monomial order
inline Element normal_form(const Presentation& P, const Element& e,
                           ReductionTrace* trace = nullptr,
                           size_t step_cap = RewriteLimits{}.step_cap) {
    if (trace) {
        trace->input = e;
        trace->steps.clear();
        trace->fixpoint = true;
    }
    Element done(e.alg);           // words known irreducible
    Element pending = e;           // descending map: begin() = largest
    size_t steps = 0;
    while (!pending.terms.empty()) {
        auto it = pending.terms.begin();
        Word w = it->first;
        Scalar c = it->second;
        int rule = -1, pos = 0;
        if (!find_match(P, w, rule, pos)) {
            done.add_term(w, c);
            pending.terms.erase(it);
            continue;
        }
        if (++steps > step_cap) {
            if (trace) {
                trace->fixpoint = false;
                trace->output = done + pending;
            }
            throw cap_exceeded(P.name + ": normal_form step cap exceeded");
        }
        pending.terms.erase(it);
        const RewriteRule& R = P.rules[static_cast<size_t>(rule)];
        if (trace) trace->steps.push_back({rule, pos, w});
        Word pre = w.substr(0, static_cast<size_t>(pos));
        Word post = w.substr(static_cast<size_t>(pos) + R.lhs.size());
        for (auto& [rw, rc] : R.rhs.terms) pending.add_term(pre + rw + post, c * rc);
    }
    if (trace) trace->output = done;
    return done;
}

inline bool replay_trace(const Presentation& P, const ReductionTrace& tr, Element& out) {
    Element cur = tr.input;
    for (auto& st : tr.steps) {
        auto it = cur.terms.find(st.before);
        if (it == cur.terms.end()) return false;
        const RewriteRule& R = P.rules[static_cast<size_t>(st.rule)];
        Scalar c = it->second;
        cur.terms.erase(it);
        Word pre = st.before.substr(0, static_cast<size_t>(st.pos));
        Word post = st.before.substr(static_cast<size_t>(st.pos) + R.lhs.size());
        for (auto& [rw, rc] : R.rhs.terms) cur.add_term(pre + rw + post, c * rc);
    }
    out = cur;
    return true;
}

// orient a nonzero relation: leading word -> (leading - relation/lc)
inline RewriteRule orient(const Element& e) {
    RewriteRule r;
    r.lhs = e.leading_word();
    Scalar lc = e.leading_coeff();
    Element rest(e.alg);
    bool first = true;
    for (auto& [w, c] : e.terms) {
        if (first) {
            first = false;
            continue;
        }
        rest.add_term(w, -(c / lc));
    }
    r.rhs = rest;
    for (auto& [w, c] : r.rhs.terms)
        if (!word_less(w, r.lhs)) throw error("orient: rule not order-decreasing");
    return r;
}

namespace detail {

// add rule if its normal form is new; returns true when a rule was added
inline bool add_reduced_rule(Presentation& P, const Element& rel, size_t step_cap) {
    Element nf = normal_form(P, rel, nullptr, step_cap);
    if (nf.is_zero()) return false;
    P.rules.push_back(orient(nf));
    return true;
}

}  // namespace detail

// build the oriented rule system from P.relations (inter-reduced fixpoint)
inline void build_rules(Presentation& P, const RewriteLimits& lim = {}) {
    P.rules.clear();
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 8) {
        changed = false;
        for (auto& rel : P.relations)
            if (detail::add_reduced_rule(P, rel, lim.step_cap)) changed = true;
        // re-reduce the current rules against each other
        std::vector<RewriteRule> old = std::move(P.rules);
        P.rules.clear();
        for (auto& r : old) {
            Element rel = r.rhs;
            rel.alg = r.rhs.alg;
            Element lhs_el(rel.alg);
            lhs_el.add_term(r.lhs, Scalar::one());
            if (detail::add_reduced_rule(P, lhs_el - r.rhs, lim.step_cap)) changed = true;
        }
    }
}

// critical pairs: proper overlaps and inclusions of rule left-hand sides
struct CriticalPair {
    size_t r1, r2;
    Word word;        // the ambiguous word
    Element red1;     // result of rewriting with r1
    Element red2;     // result of rewriting with r2
};

inline void critical_pairs_for(const Presentation& P, size_t i, size_t j,
                               std::vector<CriticalPair>& out) {
    const Word& a = P.rules[i].lhs;
    const Word& b = P.rules[j].lhs;
    auto rewrite_at = [&](const Word& w, size_t rule, size_t pos) {
        const RewriteRule& R = P.rules[rule];
        Word pre = w.substr(0, pos);
        Word post = w.substr(pos + R.lhs.size());
        Element r(P.rules[rule].rhs.alg);
        for (auto& [rw, rc] : R.rhs.terms) r.add_term(pre + rw + post, rc);
        return r;
    };
    // overlap: proper suffix of a == proper prefix of b
    for (size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) == 0) {
            Word w = a + b.substr(k);
            out.push_back({i, j, w, rewrite_at(w, i, 0), rewrite_at(w, j, a.size() - k)});
        }
    }
    // inclusion: b occurs inside a (proper)
    if (b.size() < a.size() || (b.size() == a.size() && i != j)) {
        for (size_t p = 0; p + b.size() <= a.size(); ++p) {
            if (a.compare(p, b.size(), b) == 0) {
                out.push_back({i, j, a, rewrite_at(a, i, 0), rewrite_at(a, j, p)});
            }
        }
    }
}

// bounded overlap completion; returns true when every critical pair resolved
// within the limits (then normal forms are canonical by the diamond lemma)
inline bool complete_rules(Presentation& P, const RewriteLimits& lim = {}) {
    std::deque<std::pair<size_t, size_t>> queue;
    auto enqueue_with_all = [&](size_t n) {
        for (size_t m = 0; m < P.rules.size(); ++m) {
            queue.emplace_back(n, m);
            if (m != n) queue.emplace_back(m, n);
        }
    };
    for (size_t n = 0; n < P.rules.size(); ++n)
        for (size_t m = 0; m <= n; ++m) {
            queue.emplace_back(n, m);
            if (m != n) queue.emplace_back(m, n);
        }
    size_t processed = 0;
    bool complete = true;
    while (!queue.empty()) {
        if (++processed > lim.pair_cap) return false;
        auto [i, j] = queue.front();
        queue.pop_front();
        std::vector<CriticalPair> cps;
        critical_pairs_for(P, i, j, cps);
        for (auto& cp : cps) {
            Element d = normal_form(P, cp.red1, nullptr, lim.step_cap) -
                        normal_form(P, cp.red2, nullptr, lim.step_cap);
            if (d.is_zero()) continue;
            d = normal_form(P, d, nullptr, lim.step_cap);
            if (d.is_zero()) continue;
            RewriteRule nr = orient(d);
            if (nr.lhs.size() > lim.lhs_len_cap) {
                complete = false;
                continue;
            }
            P.rules.push_back(nr);
            if (P.rules.size() > lim.rule_cap)
                throw cap_exceeded(P.name + ": completion rule cap exceeded");
            enqueue_with_all(P.rules.size() - 1);
        }
    }
    return complete;
}

// certificate: every critical pair of the current rule set resolves to zero
inline bool check_confluence(const Presentation& P, const RewriteLimits& lim = {}) {
    for (size_t i = 0; i < P.rules.size(); ++i)
        for (size_t j = 0; j < P.rules.size(); ++j) {
            std::vector<CriticalPair> cps;
            critical_pairs_for(P, i, j, cps);
            for (auto& cp : cps) {
                Element d = normal_form(P, cp.red1, nullptr, lim.step_cap) -
                            normal_form(P, cp.red2, nullptr, lim.step_cap);
                if (!d.is_zero()) return false;
            }
        }
    return true;
}

// full pipeline used by presentation builders
inline void finalize_rules(Presentation& P, bool complete, const RewriteLimits& lim = {}) {
    build_rules(P, lim);
    if (complete) {
        bool done = complete_rules(P, lim);
        P.confluent = done && check_confluence(P, lim);
    } else {
        P.confluent = false;
    }
}

}  // namespace qhopf
