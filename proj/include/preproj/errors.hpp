#pragma once

#include <stdexcept>
#include <string>

namespace preproj {

// Every failure raised by the library derives from Error; the concrete type
// names the broken contract so callers (and the CLI) can react selectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PREPROJ_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

PREPROJ_DEFINE_ERROR(FieldMismatch);
PREPROJ_DEFINE_ERROR(ShapeError);
PREPROJ_DEFINE_ERROR(LoopError);
PREPROJ_DEFINE_ERROR(ConnectivityError);
PREPROJ_DEFINE_ERROR(RangeError);
PREPROJ_DEFINE_ERROR(Inconclusive);
PREPROJ_DEFINE_ERROR(InternalInvariantError);
PREPROJ_DEFINE_ERROR(CocycleError);
PREPROJ_DEFINE_ERROR(NotInThetaD);
PREPROJ_DEFINE_ERROR(NotGeneric);
PREPROJ_DEFINE_ERROR(NotGenericStep);
PREPROJ_DEFINE_ERROR(PreconditionViolated);
PREPROJ_DEFINE_ERROR(DichotomyError);
PREPROJ_DEFINE_ERROR(SearchBudgetExceeded);
PREPROJ_DEFINE_ERROR(UnsupportedShape);
PREPROJ_DEFINE_ERROR(UsageError);
PREPROJ_DEFINE_ERROR(ParseError);

#undef PREPROJ_DEFINE_ERROR

}  // namespace preproj
