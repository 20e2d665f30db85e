// JSON, CSV and text renderings of root systems and certificates.

#pragma once

#include <json.hpp>
#include <string>

#include "coxeter/folding.hpp"
#include "coxeter/oshima.hpp"
#include "coxeter/root_system.hpp"

namespace coxeter {

/// A scalar as [a, b] when `golden`, else as a plain integer (b must be 0).
nlohmann::ordered_json scalar_json(const GoldenInt& x, bool golden);
/// The first `rank` lanes of v.
nlohmann::ordered_json vec_json(const Vec& v, std::size_t rank, bool golden);

/// {label, rank, gram, roots, positive}.
nlohmann::ordered_json root_system_json(const RootSystem& s);
/// Root system document of Psi plus a "bundles" array of
/// {base, alpha, tau_alpha} index triples and the source label.
nlohmann::ordered_json folded_json(const FoldedSystem& f);

nlohmann::ordered_json certificate_json(const Certificate& c);

std::string csv_header();
std::string certificate_csv(const Certificate& c);

} // namespace coxeter
