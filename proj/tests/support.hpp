#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace support {

inline flatac::SubsetMask S(std::initializer_list<int> e) { return flatac::SubsetMask::of(e); }

/// The code of the flatac::error thrown by fn; a test failure if none is.
template <typename Fn>
flatac::errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const flatac::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return flatac::errc::verification_failed;
}

inline std::vector<flatac::SubsetMask> members(const flatac::Family& f) { return {f.begin(), f.end()}; }

}  // namespace support
