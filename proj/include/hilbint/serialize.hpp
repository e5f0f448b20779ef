#ifndef HILBINT_SERIALIZE_HPP
#define HILBINT_SERIALIZE_HPP

#include <string>

#include "hilbint/couple.hpp"
#include "hilbint/fourier.hpp"

namespace hilbint {

// JSON forms:
//   couple + vector : {"lambda":[...], "r":..., "u_re":[...], "u_im":[...]}
//   distribution    : {"n":..,"K":..,"modes":[{"k":[..],"re":..,"im":..}]}
// Malformed input raises DeserializationError; file problems raise IoError.

struct CoupleInstance {
    couple::SpectralCouple spaces;
    couple::SpectralVector vector;
};

CoupleInstance parse_couple_instance(const std::string& json_text);
CoupleInstance load_couple_instance(const std::string& path);
std::string to_json(const couple::SpectralCouple& c, const couple::SpectralVector& u);

hormander::FourierDistribution parse_fourier(const std::string& json_text);
hormander::FourierDistribution load_fourier(const std::string& path);
std::string to_json(const hormander::FourierDistribution& u);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace hilbint

#endif
