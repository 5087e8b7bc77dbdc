#ifndef DISCGROWTH_SUMMATION_HPP
#define DISCGROWTH_SUMMATION_HPP

#include <cmath>

namespace discgrowth {

// Kahan-Babuska-Neumaier compensated accumulator.  Terms are always fed in
// the canonical storage order of the owning container, so results are
// reproducible bit-for-bit and independent of how work was partitioned.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double x) : sum_(x) {}

    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <typename It>
double compensated_sum(It first, It last) {
    CompensatedSum s;
    for (; first != last; ++first) s.add(*first);
    return s.value();
}

} // namespace discgrowth

#endif
