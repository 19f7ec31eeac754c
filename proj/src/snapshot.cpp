#include "gnse/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "json.hpp"

namespace gnse {

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; big-endian hosts need byte swaps");

using nlohmann::ordered_json;

void write_field(const std::string& path, const SpectralField& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("write_field: cannot open " + path);
    ordered_json h;
    h["format"] = "gnse-field-v1";
    h["n"] = u.n();
    h["L"] = u.params().L;
    h["nu"] = u.params().nu;
    h["K"] = u.K();
    h["count"] = u.mode_count();
    out << h.dump() << "\n";

    std::string rec;
    for (int i = 0; i < u.mode_count(); ++i) {
        rec.clear();
        for (int c = 0; c < u.n(); ++c) {
            const int32_t v = u.wave(i).c[c];
            rec.append(reinterpret_cast<const char*>(&v), sizeof v);
        }
        for (int c = 0; c < u.n(); ++c) {
            const double re = u.at(i, c).real(), im = u.at(i, c).imag();
            rec.append(reinterpret_cast<const char*>(&re), sizeof re);
            rec.append(reinterpret_cast<const char*>(&im), sizeof im);
        }
        out.write(rec.data(), std::streamsize(rec.size()));
    }
    if (!out) throw ConfigError("write_field: short write to " + path);
}

SpectralField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("read_field: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw ConfigError("read_field: missing header in " + path);
    ordered_json h;
    try {
        h = ordered_json::parse(header);
    } catch (const std::exception& e) {
        throw ConfigError("read_field: bad header in " + path + ": " + e.what());
    }
    if (h.value("format", "") != std::string("gnse-field-v1"))
        throw ConfigError("read_field: unknown format in " + path);

    const int n = h.at("n").get<int>();
    const int K = h.at("K").get<int>();
    const auto p = PhysicalParams::make(n, h.at("L").get<double>(), h.at("nu").get<double>());
    SpectralField u(p, K);
    const int count = h.at("count").get<int>();
    if (count != u.mode_count())
        throw ConfigError("read_field: mode count mismatch in " + path);

    for (int i = 0; i < count; ++i) {
        int32_t kc[3] = {0, 0, 0};
        for (int c = 0; c < n; ++c)
            in.read(reinterpret_cast<char*>(&kc[c]), sizeof(int32_t));
        WaveVector k{kc[0], kc[1], kc[2]};
        if (!(k == u.wave(i))) throw ConfigError("read_field: mode order mismatch in " + path);
        for (int c = 0; c < n; ++c) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char*>(&re), sizeof re);
            in.read(reinterpret_cast<char*>(&im), sizeof im);
            u.at(i, c) = cplx(re, im);
        }
        if (!in) throw ConfigError("read_field: truncated record in " + path);
    }
    return u;
}

void write_field_csv(const std::string& path, const SpectralField& u) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_field_csv: cannot open " + path);
    out << (u.n() == 2 ? "k1,k2" : "k1,k2,k3");
    for (int c = 0; c < u.n(); ++c) out << ",re" << c + 1 << ",im" << c + 1;
    out << "\n";
    char buf[64];
    for (int i = 0; i < u.mode_count(); ++i) {
        for (int c = 0; c < u.n(); ++c) out << u.wave(i).c[c] << (c + 1 < u.n() ? "," : "");
        for (int c = 0; c < u.n(); ++c) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g", u.at(i, c).real(), u.at(i, c).imag());
            out << buf;
        }
        out << "\n";
    }
}

}  // namespace gnse
