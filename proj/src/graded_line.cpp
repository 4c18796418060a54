#include "tatekit/graded_line.hpp"

namespace tatekit {

GradedLine::GradedLine(int g, Scalar s) : grade(g), scalar(std::move(s)) {
    if (scalar.is_zero()) throw PreconditionError("a graded line needs a nonzero scalar");
}

GradedLine GradedLine::tensor(const GradedLine& rhs) const {
    return GradedLine(grade + rhs.grade, scalar * rhs.scalar);
}

GradedLine GradedLine::inverse_line() const { return GradedLine(-grade, scalar.inverse()); }

std::string GradedLine::to_string() const {
    return "(grade " + std::to_string(grade) + ", scalar " + scalar.to_string() + ")";
}

KoszulSwap koszul_swap(const GradedLine& a, const GradedLine& b) {
    int sign = (a.grade % 2 != 0 && b.grade % 2 != 0) ? -1 : 1;
    GradedLine first = b, second = a;
    if (sign < 0) first.scalar = -first.scalar;
    return KoszulSwap{std::move(first), std::move(second), sign};
}

}  // namespace tatekit
