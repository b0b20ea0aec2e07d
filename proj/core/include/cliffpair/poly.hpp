#pragma once

#include "cliffpair/scalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cliffpair {

// exponent vector; at most four variables
using Expt = std::array<uint16_t, 4>;

// commutative polynomial ring with weighted variables
struct PolyRing {
    size_t nvars = 0;
    std::vector<int> weights;
    std::vector<std::string> names;

    int wdeg(const Expt& e) const {
        int d = 0;
        for (size_t i = 0; i < nvars; ++i) d += weights[i] * e[i];
        return d;
    }
    // weighted degree first, then lex with earlier variables larger
    bool less(const Expt& a, const Expt& b) const;
};

class WPoly {
public:
    WPoly() : ring_(nullptr) {}
    explicit WPoly(const PolyRing* ring) : ring_(ring) {}
    static WPoly constant(const PolyRing* ring, const Scalar& c);
    static WPoly variable(const PolyRing* ring, size_t i, int power = 1);

    const PolyRing* ring() const { return ring_; }
    const std::map<Expt, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Expt& e, const Scalar& c);
    Scalar coeff(const Expt& e) const;
    // term maximal in the monomial order
    std::pair<Expt, Scalar> leading() const;
    int degree() const; // max weighted degree, -1 when zero
    WPoly top_part() const;

    WPoly& operator+=(const WPoly& o);
    WPoly& operator-=(const WPoly& o);
    WPoly& operator*=(const Scalar& c);
    friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
    friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    friend WPoly operator*(WPoly a, const Scalar& c) { return a *= c; }
    bool operator==(const WPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    const PolyRing* ring_;
    std::map<Expt, Scalar> terms_;
};

// full normal form of p modulo the set G
WPoly reduce(WPoly p, const std::vector<WPoly>& G);

// Buchberger completion
std::vector<WPoly> groebner(std::vector<WPoly> gens);

// standard monomials of a zero-dimensional ideal given by a Groebner basis
struct QuotientInfo {
    size_t dim = 0;
    std::map<int, size_t> graded; // weighted degree -> count
};
QuotientInfo quotient_info(const PolyRing* ring, const std::vector<WPoly>& gb, int degree_bound);

} // namespace cliffpair
