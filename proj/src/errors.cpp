#include "phaseatlas/errors.hpp"

#include <sstream>

namespace phaseatlas {

std::string format_point(const std::vector<std::size_t>& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ",";
        os << k[i];
    }
    os << ")";
    return os.str();
}

GapClosure::GapClosure(const std::vector<std::size_t>& k, double gap)
    : PreconditionError("gap closure at grid point " + format_point(k) + " (gap " +
                        std::to_string(gap) + ")"),
      point(k),
      gap(gap) {}

VanishingLink::VanishingLink(const std::vector<std::size_t>& k, std::size_t direction,
                             double mag)
    : PreconditionError("vanishing link at grid point " + format_point(k) + " direction " +
                        std::to_string(direction) + " (|overlap| " + std::to_string(mag) + ")"),
      point(k),
      direction(direction) {}

SliceDisagreement::SliceDisagreement(std::size_t i, std::size_t j)
    : PreconditionError("transverse slices disagree for coordinate pair (" + std::to_string(i) +
                        "," + std::to_string(j) + ")"),
      i(i),
      j(j) {}

MidpointDegeneracy::MidpointDegeneracy(const std::vector<std::size_t>& k, double t, double gap)
    : PreconditionError("interpolated state degenerate at grid point " + format_point(k) +
                        ", t=" + std::to_string(t) + " (top gap " + std::to_string(gap) + ")"),
      point(k),
      t(t) {}

DimensionTooHigh::DimensionTooHigh(std::size_t dim)
    : PreconditionError("complex dimension " + std::to_string(dim) +
                        " exceeds the stable range (<= 3) for the K-group identification"),
      dim(dim) {}

}  // namespace phaseatlas
