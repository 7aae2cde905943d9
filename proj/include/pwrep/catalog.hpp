#pragma once

#include <string>
#include <vector>

#include "pwrep/dfao.hpp"
#include "pwrep/morphism.hpp"

namespace pwrep {

// Largest named-word prefix served by the catalog.
inline constexpr size_t kMaxPrefixLength = size_t{1} << 26;

// Morphisms by name: tm, vtm, h, g_full, f, g, psi, phi, rho, sigma,
// tau, gamma, delta, phi0..phi4.
const Morphism& catalog_morphism(const std::string& name);

std::vector<std::string> catalog_morphism_names();

// Named (partial) words: tm, vtm, h_vtm, g_vtm, f_fix, g_f_fix,
// psi_fix, phi_psi_fix, rho_fix, sigma_rho_fix, tau_tm, gamma_fix,
// delta_gamma_fix, phi0_delta_gamma_fix..phi4_delta_gamma_fix.
PartialWord named_word_prefix(const std::string& id, size_t length);

// Minimal base-k DFAO for a catalog word, built along its morphism
// chain (all catalog constructions are uniform).
Dfao catalog_dfao(const std::string& id);

std::vector<std::string> catalog_word_ids();

}  // namespace pwrep
