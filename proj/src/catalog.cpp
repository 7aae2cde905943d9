#include "pwrep/catalog.hpp"

#include <map>
#include <stdexcept>

namespace pwrep {

namespace {

// Image tables in digit form; the digit equal to the target alphabet
// size denotes the hole.
struct MorphismSpec {
  const char* name;
  const char* images;
  int target_size;
};

const MorphismSpec kMorphisms[] = {
    {"tm", "0->01, 1->10", 2},
    {"vtm", "0->012, 1->02, 2->1", 3},
    {"h", "0->1100, 1->0112, 2->1010", 2},
    {"g_full", "0->1100, 1->0111, 2->1010", 2},
    {"f", "0->01, 1->23, 2->24, 3->51, 4->06, 5->01, 6->74, 7->24", 8},
    {"g", "0->0, 1->1, 2->0, 3->1, 4->0, 5->1, 6->2, 7->1", 2},
    {"psi",
     "0->012321012340121012321234, 1->012101234323401234321234, "
     "2->012101232123401232101234, 3->012321234323401232101234, "
     "4->012321234012101234321234",
     5},
    {"phi", "0->211100, 1->101100, 2->111000, 3->110010, 4->110001", 2},
    {"rho", "0->03, 1->12, 2->01, 3->10", 4},
    {"sigma", "0->3204, 1->1204, 2->3104, 3->1304", 4},
    {"tau", "0->013, 1->023", 3},
    {"gamma", "0->03, 1->02, 2->21, 3->20", 4},
    {"delta", "0->01302, 1->01234, 2->43142, 3->43210", 5},
    {"phi0", "0->5, 1->1, 2->2, 3->3, 4->4", 5},
    {"phi1", "0->0, 1->5, 2->2, 3->3, 4->4", 5},
    {"phi2", "0->0, 1->1, 2->5, 3->3, 4->4", 5},
    {"phi3", "0->0, 1->1, 2->2, 3->5, 4->4", 5},
    {"phi4", "0->0, 1->1, 2->2, 3->3, 4->5", 5},
};

const std::map<std::string, Morphism>& morphism_table() {
  static const std::map<std::string, Morphism> table = [] {
    std::map<std::string, Morphism> t;
    for (const MorphismSpec& spec : kMorphisms) {
      t.emplace(spec.name, Morphism::parse(spec.images, spec.target_size));
    }
    return t;
  }();
  return table;
}

// A named word is either a fixed point or a morphic image of another
// named word.
struct WordSpec {
  const char* id;
  const char* morphism;  // fixed-point morphism, or outer image morphism
  const char* inner;     // nullptr for fixed points (seed letter 0)
};

const WordSpec kWords[] = {
    {"tm", "tm", nullptr},
    {"vtm", "vtm", nullptr},
    {"h_vtm", "h", "vtm"},
    {"g_vtm", "g_full", "vtm"},
    {"f_fix", "f", nullptr},
    {"g_f_fix", "g", "f_fix"},
    {"psi_fix", "psi", nullptr},
    {"phi_psi_fix", "phi", "psi_fix"},
    {"rho_fix", "rho", nullptr},
    {"sigma_rho_fix", "sigma", "rho_fix"},
    {"tau_tm", "tau", "tm"},
    {"gamma_fix", "gamma", nullptr},
    {"delta_gamma_fix", "delta", "gamma_fix"},
    {"phi0_delta_gamma_fix", "phi0", "delta_gamma_fix"},
    {"phi1_delta_gamma_fix", "phi1", "delta_gamma_fix"},
    {"phi2_delta_gamma_fix", "phi2", "delta_gamma_fix"},
    {"phi3_delta_gamma_fix", "phi3", "delta_gamma_fix"},
    {"phi4_delta_gamma_fix", "phi4", "delta_gamma_fix"},
};

const WordSpec* find_word(const std::string& id) {
  for (const WordSpec& spec : kWords) {
    if (id == spec.id) return &spec;
  }
  return nullptr;
}

}  // namespace

const Morphism& catalog_morphism(const std::string& name) {
  const auto& table = morphism_table();
  auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown catalog morphism: " + name);
  }
  return it->second;
}

std::vector<std::string> catalog_morphism_names() {
  std::vector<std::string> names;
  for (const MorphismSpec& spec : kMorphisms) names.push_back(spec.name);
  return names;
}

PartialWord named_word_prefix(const std::string& id, size_t length) {
  const WordSpec* spec = find_word(id);
  if (!spec) throw std::invalid_argument("unknown catalog word: " + id);
  if (length > kMaxPrefixLength) {
    throw std::invalid_argument("requested prefix length exceeds cap");
  }
  const Morphism& m = catalog_morphism(spec->morphism);
  if (!spec->inner) return fixed_point_prefix(m, 0, length);
  auto width = m.uniform_width();
  // Uniform outer morphisms need only ceil(length/width) inner symbols.
  size_t inner_len = width ? (length + *width - 1) / *width : length;
  PartialWord inner = named_word_prefix(spec->inner, inner_len);
  PartialWord img = apply(m, inner);
  return img.size() > length ? img.prefix(length) : img;
}

Dfao catalog_dfao(const std::string& id) {
  // tm has a uniform morphism as well, but both it and the non-uniform
  // vtm ship as validated built-in automata.
  if (id == "tm") return minimize(builtin_dfao("T"));
  if (id == "vtm") return minimize(builtin_dfao("VTM"));
  const WordSpec* spec = find_word(id);
  if (!spec) throw std::invalid_argument("unknown catalog word: " + id);
  const Morphism& m = catalog_morphism(spec->morphism);
  if (!spec->inner) {
    return minimize(dfao_from_uniform_fixed_point(m));
  }
  Dfao inner = catalog_dfao(spec->inner);
  auto width = m.uniform_width();
  if (!width) {
    throw std::invalid_argument("non-uniform image morphism for " + id);
  }
  return minimize(*width == 1 ? apply_coding(inner, m)
                              : image_dfao(inner, m));
}

std::vector<std::string> catalog_word_ids() {
  std::vector<std::string> ids;
  for (const WordSpec& spec : kWords) ids.push_back(spec.id);
  return ids;
}

}  // namespace pwrep
