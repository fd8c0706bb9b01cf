#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace apbench::digest {

std::string sha256_hex(std::string_view data);

// Digest of a field tuple. Fields are length-prefixed before hashing so
// ("ab","c") and ("a","bc") cannot collide.
std::string sha256_hex_fields(const std::vector<std::string_view>& fields);

}  // namespace apbench::digest
