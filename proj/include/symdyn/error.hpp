#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

// Raised when an input violates an operation's precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SequenceTooShort : public std::length_error {
public:
    SequenceTooShort(std::size_t have, std::size_t need)
        : std::length_error("sequence too short: length " + std::to_string(have) +
                            ", need at least " + std::to_string(need)),
          have_(have), need_(need) {}

    std::size_t have() const noexcept { return have_; }
    std::size_t need() const noexcept { return need_; }

private:
    std::size_t have_;
    std::size_t need_;
};

// Some count is positive where the model assigns probability zero.
class ZeroProbabilityObserved : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SizeOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace symdyn
