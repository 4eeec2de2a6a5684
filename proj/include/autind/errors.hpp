#ifndef AUTIND_ERRORS_HPP
#define AUTIND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace autind {

/// Domain error categories. The CLI maps every one of these to exit status 2
/// and reports the name returned by kind_name().
enum class ErrorKind {
    NotStable,
    BlocksDiffer,
    BudgetExceeded,
    RankMismatch,
    DegreeBudget,
    BadOrbit,
    NoProvenance,
    NotUnramified,
    LocalMismatch,
    PlaceSetMismatch,
    HypothesisViolated,
    ShapeError,
    Inconsistent,
    InvalidArgument,
};

constexpr std::string_view kind_name(ErrorKind k) noexcept
{
    switch (k) {
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::BlocksDiffer: return "BlocksDiffer";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DegreeBudget: return "DegreeBudget";
    case ErrorKind::BadOrbit: return "BadOrbit";
    case ErrorKind::NoProvenance: return "NoProvenance";
    case ErrorKind::NotUnramified: return "NotUnramified";
    case ErrorKind::LocalMismatch: return "LocalMismatch";
    case ErrorKind::PlaceSetMismatch: return "PlaceSetMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

inline void require(bool cond, ErrorKind kind, const std::string& detail)
{
    if (!cond)
        fail(kind, detail);
}

} // namespace autind

#endif // AUTIND_ERRORS_HPP
