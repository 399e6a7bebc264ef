#ifndef SMTEVAL_VERSION_HPP
#define SMTEVAL_VERSION_HPP

namespace smteval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace smteval

#endif
