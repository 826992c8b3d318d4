#pragma once

#include <stdexcept>
#include <string>

namespace wh2dl {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whole-file read; throws IoError.
std::string read_file(const std::string& path);

}  // namespace wh2dl
