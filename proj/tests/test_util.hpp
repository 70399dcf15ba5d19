#pragma once

#include <cstdlib>
#include <string>

#ifndef MWE_TEST_DATA_DIR
#define MWE_TEST_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) {
  const char* env = std::getenv("MWE_TEST_DATA");
  std::string dir = env != nullptr ? env : MWE_TEST_DATA_DIR;
  return dir + "/" + name;
}
