#include "cliffpair/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace cliffpair {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

static std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string out;
    if (re_ != 0) {
        out = rat_str(re_);
        if (im_ > 0) out += "+";
    }
    if (im_ == 1) out += "i";
    else if (im_ == -1) out += "-i";
    else out += rat_str(im_) + "*i";
    return out;
}

static mpq_class parse_rat(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1); // set_str rejects a leading '+'
    if (s.empty()) throw std::invalid_argument("Scalar: empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Scalar: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("Scalar: empty input");

    // Split off an imaginary tail "<rat>*i", "i", "+i" or "-i" if present.
    if (s.back() == 'i') {
        std::string head = s.substr(0, s.size() - 1);
        mpq_class im;
        std::string re_part;
        if (head.empty() || head == "+") { im = 1; }
        else if (head == "-") { im = -1; }
        else if (head.back() == '+' || head.back() == '-') {
            // forms "re+i" and "re-i" with unit imaginary part
            im = head.back() == '+' ? 1 : -1;
            re_part = head.substr(0, head.size() - 1);
        }
        else if (head.back() == '*') {
            // find where the imaginary coefficient starts: last '+' or '-'
            // that is not a leading sign and not inside the real part
            size_t cut = std::string::npos;
            for (size_t k = head.size() - 1; k > 0; --k) {
                if (head[k] == '+' || head[k] == '-') { cut = k; break; }
            }
            std::string im_str = head.substr(0, head.size() - 1);
            if (cut != std::string::npos) {
                std::string cand_re = head.substr(0, cut);
                std::string cand_im = head.substr(cut, head.size() - 1 - cut);
                // a '-' directly after '/' or inside digits is not a separator
                char prev = head[cut - 1];
                if (prev != '/' && prev != '*') {
                    re_part = cand_re;
                    im_str = cand_im;
                }
            }
            im = parse_rat(im_str);
        } else {
            // forms like "3i" are not in the grammar
            throw std::invalid_argument("Scalar: bad input '" + text + "'");
        }
        mpq_class re = re_part.empty() ? mpq_class(0) : parse_rat(re_part);
        return Scalar(re, im);
    }
    return Scalar(parse_rat(s));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace cliffpair
