#pragma once

#include <string>

#include "gnse/field.hpp"

namespace gnse {

// Field snapshot: one JSON header line {"format","n","L","nu","K","count"}
// followed by `count` binary records, one per stored (canonical) mode:
// n int32 wave components, then 2n little-endian float64 (re, im per
// component).  Modes are written in lattice order so files are
// byte-reproducible.
void write_field(const std::string& path, const SpectralField& u);
SpectralField read_field(const std::string& path);

// Debug dump: "k1,k2[,k3],re1,im1,..." one line per stored mode.
void write_field_csv(const std::string& path, const SpectralField& u);

}  // namespace gnse
