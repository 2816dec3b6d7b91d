#ifndef COMBWALK_ERRORS_HPP
#define COMBWALK_ERRORS_HPP

#include <stdexcept>

namespace combwalk {

/// Thrown when a computation would exceed its configured work/memory
/// budget (e.g. the kernel DP step guard). Mapped to exit code 3 by the
/// command-line tool.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace combwalk

#endif  // COMBWALK_ERRORS_HPP
