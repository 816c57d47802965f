#ifndef PFBI_IO_HPP
#define PFBI_IO_HPP

#include <filesystem>
#include <string>

#include "pfbi/bridge.hpp"
#include "pfbi/discriminator.hpp"

namespace pfbi {

/// Latent CSV: header "# pfbi-latents v1 dim=<d>", then one point per line,
/// d comma-separated decimals. Values use the shortest representation that
/// round-trips the double exactly, so parse -> write -> parse is stable.
void write_latents_csv(const std::filesystem::path& path, const LatentDataset& data);
LatentDataset read_latents_csv(const std::filesystem::path& path);

/// Path CSV: header "# pfbi-path v1 dim=<d>", rows t,x_1,...,x_d.
void write_path_csv(const std::filesystem::path& path, const Path& p);
Path read_path_csv(const std::filesystem::path& path);

/// Shortest decimal representation of x that parses back to the same bits.
std::string format_double(double x);

}  // namespace pfbi

#endif  // PFBI_IO_HPP
