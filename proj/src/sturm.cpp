#include "polar/polynomial.hpp"

#include <stdexcept>

namespace polar {
namespace {

// Sturm chain of a square-free polynomial. Each member is replaced by a
// positive multiple with coprime integer coefficients, which keeps signs and bounds
// coefficient growth.
Polynomial positive_rescale(const Polynomial& p) {
    const Polynomial q = primitive_part(p);
    return q.leading().sign() == p.leading().sign() ? q : -q;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(positive_rescale(p));
    Polynomial d = differentiate(p);
    if (d.is_zero()) return chain;
    chain.push_back(positive_rescale(d));
    while (true) {
        const Polynomial r = divide_with_remainder(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(positive_rescale(-r));
    }
    return chain;
}

std::size_t sign_changes(const std::vector<Polynomial>& chain, const BigRational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = evaluate(q, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t count_in(const std::vector<Polynomial>& chain, const BigRational& lo, const BigRational& hi) {
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

void bisect(const std::vector<Polynomial>& chain, const BigRational& lo, const BigRational& hi,
            std::size_t count, const BigRational& width, std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1 && hi - lo <= width) {
        out.emplace_back(lo, hi);
        return;
    }
    const BigRational mid = (lo + hi) / BigRational(2);
    const std::size_t left = count_in(chain, lo, mid);
    bisect(chain, lo, mid, left, width, out);
    bisect(chain, mid, hi, count - left, width, out);
}

}  // namespace

std::size_t sturm_root_count(const Polynomial& p, const Interval& iv) {
    if (p.is_zero()) throw std::domain_error("sturm_root_count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return count_in(sturm_chain(square_free_part(p)), iv.lo, iv.hi);
}

std::vector<Interval> isolate_roots(const Polynomial& p, const Interval& iv, const BigRational& width) {
    if (p.is_zero()) throw std::domain_error("isolate_roots of the zero polynomial");
    if (width.sign() <= 0) throw std::invalid_argument("isolate_roots requires a positive width");
    std::vector<Interval> out;
    if (p.degree() == 0) return out;
    const auto chain = sturm_chain(square_free_part(p));
    bisect(chain, iv.lo, iv.hi, count_in(chain, iv.lo, iv.hi), width, out);
    return out;
}

}  // namespace polar
