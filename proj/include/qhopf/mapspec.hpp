#pragma once

// MapSpec: a generator->image table defining an algebra map, an
// anti-algebra map, or a map into a tensor square (coproduct-like), plus
// the leg-surgery helpers used by the Hopf and connection layers.

#include "qhopf/rewrite.hpp"

namespace qhopf {

enum class MapKind { hom, anti_hom, into_tensor };

struct MapSpec {
    std::string name;
    const Presentation* src = nullptr;
    const Presentation* tgt = nullptr;               // hom / anti_hom
    std::vector<const Presentation*> tensor_tgt;     // into_tensor legs
    MapKind kind = MapKind::hom;
    std::vector<Element> images;                     // per source letter
    std::vector<TensorElement> tensor_images;        // per source letter

    void validate() const {
        size_t n = src->letters.size();
        if (kind == MapKind::into_tensor) {
            if (tensor_images.size() != n)
                throw error(name + ": missing generator image");
        } else if (images.size() != n) {
            throw error(name + ": missing generator image");
        }
    }

    Element apply(const Element& a) const {
        if (kind == MapKind::into_tensor)
            throw error(name + ": tensor-valued map applied as algebra map");
        if (a.alg && a.alg != src) throw error(name + ": element not in source algebra");
        Element out(tgt);
        for (auto& [w, c] : a.terms) {
            Element t = tgt->scalar(c);
            if (kind == MapKind::hom) {
                for (char ch : w) t = t * images[static_cast<size_t>(ch)];
            } else {
                for (size_t i = w.size(); i-- > 0;)
                    t = t * images[static_cast<size_t>(w[i])];
            }
            out += t;
        }
        return out;
    }

    TensorElement apply_tensor(const Element& a) const {
        if (kind != MapKind::into_tensor)
            throw error(name + ": algebra map applied as tensor map");
        if (a.alg && a.alg != src) throw error(name + ": element not in source algebra");
        TensorElement out(tensor_tgt);
        for (auto& [w, c] : a.terms) {
            TensorElement t(tensor_tgt);
            t.add_term(TensorKey(tensor_tgt.size()), c);
            for (char ch : w) t = t * tensor_images[static_cast<size_t>(ch)];
            out += t;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Tensor leg surgery
// ---------------------------------------------------------------------------

// apply an algebra / anti-algebra map to one leg
inline TensorElement map_leg(const TensorElement& t, size_t leg, const MapSpec& m) {
    if (leg >= t.arity()) throw error("map_leg: no such leg");
    if (t.legs[leg] != m.src) throw error(m.name + ": leg algebra mismatch");
    std::vector<const Presentation*> legs = t.legs;
    legs[leg] = m.tgt;
    TensorElement out(legs);
    for (auto& [k, c] : t.terms) {
        Element im = m.apply(m.src->word_el(k[leg]));
        for (auto& [w, s] : im.terms) {
            TensorKey nk = k;
            nk[leg] = w;
            out.add_term(nk, c * s);
        }
    }
    return out;
}

// split one leg through an into-tensor map (arity grows by one)
inline TensorElement delta_leg(const TensorElement& t, size_t leg, const MapSpec& m) {
    if (leg >= t.arity()) throw error("delta_leg: no such leg");
    if (t.legs[leg] != m.src) throw error(m.name + ": leg algebra mismatch");
    std::vector<const Presentation*> legs;
    for (size_t i = 0; i < t.legs.size(); ++i) {
        if (i == leg) {
            legs.push_back(m.tensor_tgt[0]);
            legs.push_back(m.tensor_tgt[1]);
        } else {
            legs.push_back(t.legs[i]);
        }
    }
    TensorElement out(legs);
    for (auto& [k, c] : t.terms) {
        TensorElement im = m.apply_tensor(m.src->word_el(k[leg]));
        for (auto& [ik, s] : im.terms) {
            TensorKey nk;
            nk.reserve(k.size() + 1);
            for (size_t i = 0; i < k.size(); ++i) {
                if (i == leg) {
                    nk.push_back(ik[0]);
                    nk.push_back(ik[1]);
                } else {
                    nk.push_back(k[i]);
                }
            }
            out.add_term(nk, c * s);
        }
    }
    return out;
}

// multiply adjacent legs i and i+1 (same presentation)
inline TensorElement mult_legs(const TensorElement& t, size_t i) {
    if (i + 1 >= t.arity()) throw error("mult_legs: no such legs");
    if (t.legs[i] != t.legs[i + 1]) throw error("mult_legs: leg algebras differ");
    std::vector<const Presentation*> legs;
    for (size_t j = 0; j < t.legs.size(); ++j)
        if (j != i + 1) legs.push_back(t.legs[j]);
    TensorElement out(legs);
    for (auto& [k, c] : t.terms) {
        TensorKey nk;
        nk.reserve(k.size() - 1);
        for (size_t j = 0; j < k.size(); ++j) {
            if (j == i)
                nk.push_back(k[i] + k[i + 1]);
            else if (j != i + 1)
                nk.push_back(k[j]);
        }
        out.add_term(nk, c);
    }
    return out;
}

// contract one leg with a counit-like functional (values per letter,
// extended multiplicatively over the leg word)
inline TensorElement contract_leg(const TensorElement& t, size_t leg,
                                  const std::vector<Scalar>& values) {
    if (leg >= t.arity()) throw error("contract_leg: no such leg");
    std::vector<const Presentation*> legs;
    for (size_t j = 0; j < t.legs.size(); ++j)
        if (j != leg) legs.push_back(t.legs[j]);
    TensorElement out(legs);
    for (auto& [k, c] : t.terms) {
        Scalar f = c;
        for (char ch : k[leg]) {
            f *= values[static_cast<size_t>(ch)];
            if (f.is_zero()) break;
        }
        if (f.is_zero()) continue;
        TensorKey nk;
        nk.reserve(k.size() - 1);
        for (size_t j = 0; j < k.size(); ++j)
            if (j != leg) nk.push_back(k[j]);
        out.add_term(nk, f);
    }
    return out;
}

// normal-form every leg word (multilinear expansion)
inline TensorElement nf_legs(const TensorElement& t) {
    TensorElement out(t.legs);
    for (auto& [k, c] : t.terms) {
        std::vector<Element> parts;
        parts.reserve(k.size());
        bool zero = false;
        for (size_t i = 0; i < k.size(); ++i) {
            Element e = normal_form(*t.legs[i], t.legs[i]->word_el(k[i]));
            if (e.is_zero()) {
                zero = true;
                break;
            }
            parts.push_back(std::move(e));
        }
        if (zero) continue;
        out += c * tensor(parts);
    }
    return out;
}

inline Element to_element(const TensorElement& t) {
    if (t.arity() != 1) throw error("to_element: arity != 1");
    Element e(t.legs[0]);
    for (auto& [k, c] : t.terms) e.add_term(k[0], c);
    return e;
}

inline TensorElement to_tensor(const Element& e) {
    TensorElement t({e.alg});
    for (auto& [w, c] : e.terms) t.add_term({w}, c);
    return t;
}

// move leg `from` to position `to`, keeping the other legs in order
inline TensorElement move_leg(const TensorElement& t, size_t from, size_t to) {
    if (from >= t.arity() || to >= t.arity()) throw error("move_leg: no such leg");
    std::vector<const Presentation*> legs = t.legs;
    auto pl = legs[from];
    legs.erase(legs.begin() + static_cast<long>(from));
    legs.insert(legs.begin() + static_cast<long>(to), pl);
    TensorElement out(legs);
    for (auto& [k, c] : t.terms) {
        TensorKey nk = k;
        Word w = nk[from];
        nk.erase(nk.begin() + static_cast<long>(from));
        nk.insert(nk.begin() + static_cast<long>(to), w);
        out.add_term(nk, c);
    }
    return out;
}

}  // namespace qhopf
