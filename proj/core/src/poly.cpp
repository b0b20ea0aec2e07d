#include "cliffpair/poly.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cliffpair {

bool PolyRing::less(const Expt& a, const Expt& b) const {
    int da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

WPoly WPoly::constant(const PolyRing* ring, const Scalar& c) {
    WPoly p(ring);
    p.add_term(Expt{}, c);
    return p;
}

WPoly WPoly::variable(const PolyRing* ring, size_t i, int power) {
    if (i >= ring->nvars) throw std::out_of_range("WPoly: variable index");
    WPoly p(ring);
    Expt e{};
    e[i] = (uint16_t)power;
    p.add_term(e, Scalar(1));
    return p;
}

void WPoly::add_term(const Expt& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar WPoly::coeff(const Expt& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::pair<Expt, Scalar> WPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("WPoly: leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ring_->less(best->first, it->first)) best = it;
    return *best;
}

int WPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, ring_->wdeg(e));
    return d;
}

WPoly WPoly::top_part() const {
    WPoly out(ring_);
    int d = degree();
    for (const auto& [e, c] : terms_)
        if (ring_->wdeg(e) == d) out.add_term(e, c);
    return out;
}

WPoly& WPoly::operator+=(const WPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WPoly& WPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    WPoly out(a.ring() ? a.ring() : b.ring());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Expt e{};
            for (size_t i = 0; i < 4; ++i) e[i] = (uint16_t)(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string WPoly::str() const {
    if (terms_.empty()) return "0";
    // render highest terms first
    std::vector<std::pair<Expt, Scalar>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(),
              [&](const auto& x, const auto& y) { return ring_->less(y.first, x.first); });
    std::string out;
    for (const auto& [e, c] : ts) {
        std::string mono;
        for (size_t i = 0; i < ring_->nvars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        if (!out.empty() && cs[0] != '-') out += "+";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else if (cs == "-1") out += "-" + mono;
        else out += cs + "*" + mono;
    }
    return out;
}

namespace {

bool divides(const Expt& a, const Expt& b) {
    for (size_t i = 0; i < 4; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expt quotient_expt(const Expt& b, const Expt& a) {
    Expt q{};
    for (size_t i = 0; i < 4; ++i) q[i] = (uint16_t)(b[i] - a[i]);
    return q;
}

Expt lcm_expt(const Expt& a, const Expt& b) {
    Expt l{};
    for (size_t i = 0; i < 4; ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

} // namespace

WPoly reduce(WPoly p, const std::vector<WPoly>& G) {
    const PolyRing* ring = p.ring();
    WPoly out(ring);
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading();
        bool hit = false;
        for (const WPoly& g : G) {
            if (g.is_zero()) continue;
            auto [gm, gc] = g.leading();
            if (!divides(gm, lm)) continue;
            WPoly factor(ring);
            factor.add_term(quotient_expt(lm, gm), lc / gc);
            p -= factor * g;
            hit = true;
            break;
        }
        if (!hit) {
            out.add_term(lm, lc);
            WPoly drop(ring);
            drop.add_term(lm, lc);
            p -= drop;
        }
    }
    return out;
}

std::vector<WPoly> groebner(std::vector<WPoly> gens) {
    std::vector<WPoly> G;
    for (WPoly& g : gens)
        if (!g.is_zero()) G.push_back(std::move(g));
    if (G.empty()) return G;
    const PolyRing* ring = G[0].ring();

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        auto [mi, ci] = G[i].leading();
        auto [mj, cj] = G[j].leading();
        Expt l = lcm_expt(mi, mj);
        // coprime leading monomials reduce to zero
        bool coprime = true;
        for (size_t t = 0; t < 4; ++t)
            if (mi[t] > 0 && mj[t] > 0) coprime = false;
        if (coprime) continue;
        WPoly fi(ring), fj(ring);
        fi.add_term(quotient_expt(l, mi), Scalar(1) / ci);
        fj.add_term(quotient_expt(l, mj), Scalar(1) / cj);
        WPoly s = fi * G[i] - fj * G[j];
        WPoly r = reduce(std::move(s), G);
        if (!r.is_zero()) {
            auto [rm, rc] = r.leading();
            r *= Scalar(1) / rc;
            G.push_back(std::move(r));
            for (size_t t = 0; t + 1 < G.size(); ++t) pairs.emplace_back(t, G.size() - 1);
        }
    }

    // inter-reduce
    std::vector<WPoly> out;
    for (size_t i = 0; i < G.size(); ++i) {
        std::vector<WPoly> rest;
        for (size_t j = 0; j < G.size(); ++j)
            if (j != i) rest.push_back(G[j]);
        WPoly r = reduce(G[i], rest);
        if (!r.is_zero()) {
            auto [rm, rc] = r.leading();
            r *= Scalar(1) / rc;
            bool dup = false;
            for (const WPoly& q : out)
                if (q == r) dup = true;
            if (!dup) out.push_back(std::move(r));
        }
    }
    return out;
}

QuotientInfo quotient_info(const PolyRing* ring, const std::vector<WPoly>& gb, int degree_bound) {
    std::vector<Expt> lead;
    for (const WPoly& g : gb) lead.push_back(g.leading().first);

    auto standard = [&](const Expt& e) {
        for (const Expt& l : lead)
            if (divides(l, e)) return false;
        return true;
    };

    QuotientInfo info;
    std::set<Expt> seen;
    std::deque<Expt> queue;
    Expt one{};
    if (standard(one)) {
        queue.push_back(one);
        seen.insert(one);
    }
    while (!queue.empty()) {
        Expt e = queue.front();
        queue.pop_front();
        ++info.dim;
        ++info.graded[ring->wdeg(e)];
        for (size_t i = 0; i < ring->nvars; ++i) {
            Expt f = e;
            ++f[i];
            if (ring->wdeg(f) > degree_bound)
                throw std::runtime_error("quotient_info: degree bound exceeded, ideal may not be zero dimensional");
            if (seen.count(f) || !standard(f)) continue;
            seen.insert(f);
            queue.push_back(f);
        }
    }
    return info;
}

} // namespace cliffpair
