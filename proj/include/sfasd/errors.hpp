#ifndef SFASD_ERRORS_HPP
#define SFASD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfasd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SFASD_DEFINE_ERROR(Name)            \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

SFASD_DEFINE_ERROR(MalformedGraph);
SFASD_DEFINE_ERROR(MalformedInput);
SFASD_DEFINE_ERROR(LengthMismatch);
SFASD_DEFINE_ERROR(NotTriangular);
SFASD_DEFINE_ERROR(SumMismatch);
SFASD_DEFINE_ERROR(ConditionFailed);
SFASD_DEFINE_ERROR(SearchExhausted);
SFASD_DEFINE_ERROR(MatchingUnavailable);
SFASD_DEFINE_ERROR(HallViolation);
SFASD_DEFINE_ERROR(NotReduced);
SFASD_DEFINE_ERROR(NotSequential);
SFASD_DEFINE_ERROR(Incomplete);
SFASD_DEFINE_ERROR(CapExceeded);
SFASD_DEFINE_ERROR(Infeasible);
SFASD_DEFINE_ERROR(VerificationFailed);
SFASD_DEFINE_ERROR(NoneExists);
SFASD_DEFINE_ERROR(HeuristicFailed);

#undef SFASD_DEFINE_ERROR

/// A step that the published construction guarantees has failed.  Carries the
/// path of the persisted instance dump when one was written.
class TheoremStress : public Error {
public:
    TheoremStress(const std::string& what, std::string dump_path = {})
        : Error(what), dump_path_(std::move(dump_path)) {}

    const std::string& dump_path() const noexcept { return dump_path_; }

private:
    std::string dump_path_;
};

}  // namespace sfasd

#endif  // SFASD_ERRORS_HPP
