#ifndef WITTSTACK_PLFUNC_HPP
#define WITTSTACK_PLFUNC_HPP

#include <string>
#include <vector>

#include "wittstack/bigint.hpp"

namespace wittstack {

// Continuous, strictly increasing piecewise-linear function on [x0, +inf)
// with exact rational breakpoints and slopes. Breakpoints are strictly
// increasing and start at x0 (0 for Herbrand functions); there is one slope
// per segment and the last slope extends to +inf. All slopes are positive,
// so the function is invertible.
class PLFunction {
public:
    PLFunction(BigRat value_at_start, std::vector<BigRat> breakpoints,
               std::vector<BigRat> slopes);

    static PLFunction identity();

    const std::vector<BigRat>& breakpoints() const { return xs_; }
    const std::vector<BigRat>& slopes() const { return slopes_; }
    const BigRat& value_at_start() const { return y0_; }

    BigRat eval(const BigRat& x) const;
    PLFunction inverse() const;

    bool operator==(const PLFunction& o) const {
        return y0_ == o.y0_ && xs_ == o.xs_ && slopes_ == o.slopes_;
    }

    std::string str() const;

private:
    void normalize();  // merge consecutive segments with equal slope

    BigRat y0_;
    std::vector<BigRat> xs_;      // segment starts; xs_[0] is the domain start
    std::vector<BigRat> slopes_;  // slopes_[i] on [xs_[i], xs_[i+1]]
};

}  // namespace wittstack

#endif
