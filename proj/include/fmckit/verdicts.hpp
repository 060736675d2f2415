#pragma once

#include <string>

namespace fmckit {

// Input lies outside what the implemented results cover.
struct Unsupported {
  std::string citation;
};

}  // namespace fmckit
