#include "dyndeg/rational_map.hpp"

#include <sstream>

namespace dyndeg {

void RationalMapSpec::validate() const {
  if (k < 1) throw ValidationError("map spec: k must be >= 1");
  if (components.size() != static_cast<std::size_t>(k) + 1) {
    throw ValidationError("map spec: expected k+1 components");
  }
  const std::uint64_t p = prime();
  std::int64_t deg = -1;
  std::ostringstream degrees;
  bool mismatch = false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.nvars() != static_cast<std::uint32_t>(k) + 1) {
      throw ValidationError("map spec: components must use k+1 variables");
    }
    if (c.prime() != p) throw ValidationError("map spec: mixed coefficient domains");
    if (!c.is_homogeneous()) {
      throw ValidationError("map spec: component " + std::to_string(i) +
                            " is not homogeneous");
    }
    if (c.is_zero()) {
      throw ValidationError("map spec: component " + std::to_string(i) + " is zero");
    }
    if (deg == -1) deg = c.total_degree();
    if (c.total_degree() != deg) mismatch = true;
    degrees << (i ? "," : "") << c.total_degree();
  }
  if (mismatch) {
    throw ValidationError("map spec: components of unequal degree (" + degrees.str() + ")");
  }
  auto [reduced, extracted] = mono_gcd_reduce(components);
  if (exp_total(extracted.terms().begin()->first) != 0) {
    throw ValidationError("map spec: components share the monomial factor " +
                          extracted.to_string());
  }
}

RationalMapSpec make_map_spec(int k, std::vector<MonoSumPoly> components,
                              std::string label, std::string* warning) {
  RationalMapSpec spec;
  spec.k = k;
  spec.label = std::move(label);
  auto [reduced, extracted] = mono_gcd_reduce(components);
  if (exp_total(extracted.terms().begin()->first) != 0) {
    if (warning != nullptr) {
      *warning = "common monomial " + extracted.to_string() + " removed during normalization";
    }
    spec.components = std::move(reduced);
  } else {
    spec.components = std::move(components);
  }
  spec.validate();
  return spec;
}

OracleMap oracle_map_from_spec(const RationalMapSpec& map) {
  map.validate();
  OracleMap out;
  out.k = map.k;
  out.fixed_prime = map.prime();
  out.label = map.label;
  out.stages.emplace_back(TupleStage{map.components});
  return out;
}

CompiledMap compile_map(const OracleMap& map, u64 prime) {
  if (map.fixed_prime != 0 && map.fixed_prime != prime) {
    throw ValidationError("compile_map: map lives over a different prime field");
  }
  CompiledMap out;
  out.k = map.k;
  out.prime = prime;
  const BigInt p_big(static_cast<unsigned long>(prime));
  for (const auto& stage : map.stages) {
    if (const auto* tuple = std::get_if<TupleStage>(&stage)) {
      CompiledTupleStage st;
      st.all_monomial = true;
      for (const auto& c : tuple->components) {
        std::vector<std::pair<u64, ExpVec>> terms;
        for (const auto& [e, coeff] : c.terms()) {
          BigInt r;
          mpz_mod(r.get_mpz_t(), coeff.get_mpz_t(), p_big.get_mpz_t());
          const u64 cr = r.get_ui();
          if (cr != 0) terms.emplace_back(cr, e);
        }
        if (terms.empty()) {
          throw ComputationError("compile_map: component vanished mod prime (bad reduction)");
        }
        st.all_monomial &= (terms.size() == 1);
        st.comps.push_back(std::move(terms));
      }
      out.stages.emplace_back(std::move(st));
    } else if (const auto* adj = std::get_if<AdjugateStage>(&stage)) {
      out.stages.emplace_back(*adj);
    } else {
      out.stages.emplace_back(std::get<MatrixInversionStage>(stage));
    }
  }
  return out;
}

}  // namespace dyndeg
