#include "hilbint/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hilbint {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << contents;
}

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DeserializationError(std::string(what) + ": malformed JSON");
    return j;
}

} // namespace

CoupleInstance parse_couple_instance(const std::string& json_text) {
    const json j = parse_or_throw(json_text, "couple instance");
    try {
        std::vector<double> lambda = j.at("lambda").get<std::vector<double>>();
        const double r = j.at("r").get<double>();
        std::vector<double> re = j.at("u_re").get<std::vector<double>>();
        std::vector<double> im = j.at("u_im").get<std::vector<double>>();
        if (re.size() != im.size() || re.size() != lambda.size())
            throw DeserializationError("couple instance: lambda/u_re/u_im lengths differ");
        std::vector<couple::Complex> coeffs(re.size());
        for (std::size_t k = 0; k < re.size(); ++k) coeffs[k] = {re[k], im[k]};
        return {couple::SpectralCouple(std::move(lambda), r),
                couple::SpectralVector(std::move(coeffs))};
    } catch (const json::exception& e) {
        throw DeserializationError(std::string("couple instance: ") + e.what());
    }
}

CoupleInstance load_couple_instance(const std::string& path) {
    return parse_couple_instance(read_file(path));
}

std::string to_json(const couple::SpectralCouple& c, const couple::SpectralVector& u) {
    json j;
    j["lambda"] = c.eigenvalues();
    j["r"] = c.lower_bound();
    std::vector<double> re(u.dim()), im(u.dim());
    for (std::size_t k = 0; k < u.dim(); ++k) {
        re[k] = u.coeffs()[k].real();
        im[k] = u.coeffs()[k].imag();
    }
    j["u_re"] = re;
    j["u_im"] = im;
    return j.dump();
}

hormander::FourierDistribution parse_fourier(const std::string& json_text) {
    const json j = parse_or_throw(json_text, "distribution");
    try {
        const int n = j.at("n").get<int>();
        const int K = j.at("K").get<int>();
        hormander::FourierDistribution u(n, K);
        for (const auto& mode : j.at("modes")) {
            std::vector<int> k = mode.at("k").get<std::vector<int>>();
            u.set(k, {mode.at("re").get<double>(), mode.at("im").get<double>()});
        }
        return u;
    } catch (const json::exception& e) {
        throw DeserializationError(std::string("distribution: ") + e.what());
    }
}

hormander::FourierDistribution load_fourier(const std::string& path) {
    return parse_fourier(read_file(path));
}

std::string to_json(const hormander::FourierDistribution& u) {
    json j;
    j["n"] = u.dim();
    j["K"] = u.band_limit();
    json modes = json::array();
    for (const auto& mode : u.modes()) {
        json m;
        m["k"] = mode.k;
        m["re"] = mode.coeff.real();
        m["im"] = mode.coeff.imag();
        modes.push_back(std::move(m));
    }
    j["modes"] = std::move(modes);
    return j.dump();
}

} // namespace hilbint
