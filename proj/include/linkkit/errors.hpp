#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace linkkit {

// Every domain failure carries a stable error name in kind(); the CLI
// reports that name verbatim and exits 1.
struct LinkError : std::runtime_error {
  LinkError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind_(std::move(k)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define LINKKIT_DEFINE_ERROR(Name)                                        \
  struct Name : LinkError {                                               \
    explicit Name(const std::string& msg) : LinkError(#Name, msg) {}      \
  }

LINKKIT_DEFINE_ERROR(ArcMultiplicity);
LINKKIT_DEFINE_ERROR(InconsistentOrientation);
LINKKIT_DEFINE_ERROR(ComponentMismatch);
LINKKIT_DEFINE_ERROR(BadSelector);
LINKKIT_DEFINE_ERROR(SyntaxError);
LINKKIT_DEFINE_ERROR(SemanticError);
LINKKIT_DEFINE_ERROR(RangeError);
LINKKIT_DEFINE_ERROR(IndexError);
LINKKIT_DEFINE_ERROR(BadParams);
LINKKIT_DEFINE_ERROR(TooLarge);
LINKKIT_DEFINE_ERROR(Disconnected);
LINKKIT_DEFINE_ERROR(NotAKnot);
LINKKIT_DEFINE_ERROR(NotProper);
LINKKIT_DEFINE_ERROR(OddLinking);
LINKKIT_DEFINE_ERROR(DisconnectedShadow);
LINKKIT_DEFINE_ERROR(SingularGoeritz);
LINKKIT_DEFINE_ERROR(NonConvergent);
LINKKIT_DEFINE_ERROR(RepeatedIndex);
LINKKIT_DEFINE_ERROR(OutOfRange);
LINKKIT_DEFINE_ERROR(BadK);
LINKKIT_DEFINE_ERROR(SizeMismatch);

#undef LINKKIT_DEFINE_ERROR

}  // namespace linkkit
