#include "wittstack/plfunc.hpp"

#include "wittstack/errors.hpp"

namespace wittstack {

PLFunction::PLFunction(BigRat value_at_start, std::vector<BigRat> breakpoints,
                       std::vector<BigRat> slopes)
    : y0_(std::move(value_at_start)), xs_(std::move(breakpoints)), slopes_(std::move(slopes)) {
    if (xs_.empty() || slopes_.size() != xs_.size())
        throw DomainError("piecewise-linear function needs one slope per breakpoint");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        if (!(xs_[i] < xs_[i + 1])) throw DomainError("breakpoints must strictly increase");
    for (const auto& s : slopes_)
        if (!(s > 0)) throw DomainError("slopes must be positive");
    normalize();
}

PLFunction PLFunction::identity() {
    return PLFunction(BigRat(0), {BigRat(0)}, {BigRat(1)});
}

void PLFunction::normalize() {
    std::vector<BigRat> xs{xs_[0]}, ss{slopes_[0]};
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        if (slopes_[i] == ss.back()) continue;
        xs.push_back(xs_[i]);
        ss.push_back(slopes_[i]);
    }
    xs_ = std::move(xs);
    slopes_ = std::move(ss);
}

BigRat PLFunction::eval(const BigRat& x) const {
    if (x < xs_[0]) throw DomainError("piecewise-linear evaluation left of the domain");
    BigRat y = y0_;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        bool last = i + 1 == xs_.size();
        if (last || x <= xs_[i + 1]) return y + slopes_[i] * (x - xs_[i]);
        y += slopes_[i] * (xs_[i + 1] - xs_[i]);
    }
    return y;  // unreachable
}

PLFunction PLFunction::inverse() const {
    std::vector<BigRat> ys, ss;
    ys.reserve(xs_.size());
    ss.reserve(slopes_.size());
    BigRat y = y0_;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        ys.push_back(y);
        ss.push_back(BigRat(1) / slopes_[i]);
        if (i + 1 < xs_.size()) y += slopes_[i] * (xs_[i + 1] - xs_[i]);
    }
    return PLFunction(xs_[0], std::move(ys), std::move(ss));
}

std::string PLFunction::str() const {
    std::string s = "pl(start=(" + rat_str(xs_[0]) + "," + rat_str(y0_) + ")";
    for (std::size_t i = 0; i < xs_.size(); ++i)
        s += "; x>=" + rat_str(xs_[i]) + ": slope " + rat_str(slopes_[i]);
    return s + ")";
}

}  // namespace wittstack
