#pragma once

#include <string>

// Text of the data/ files, compiled into the library.
namespace galois::embedded {

const char* catalog_text();
const char* table1_text();
const char* seress_text();

}  // namespace galois::embedded
