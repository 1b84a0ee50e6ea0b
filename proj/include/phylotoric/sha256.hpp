#ifndef PHYLOTORIC_SHA256_HPP
#define PHYLOTORIC_SHA256_HPP

#include <string>

namespace phylotoric {

std::string sha256_hex(const std::string& data);

} // namespace phylotoric

#endif
