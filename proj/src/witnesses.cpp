// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boxlab/witnesses.hpp"

#include <cstdio>
#include <sstream>

#include "boxlab/box_json.hpp"

namespace boxlab {

Rational covariance(const Box& box, Observable o1, Observable o2) {
  if (o1 == o2) throw PairNotJoint("covariance needs two distinct observables");
  for (ContextId c : kAllContexts) {
    const int i = position_in_context(c, o1), j = position_in_context(c, o2);
    if (i < 0 || j < 0) continue;
    Rational joint;
    const auto p = box.context(c);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const std::vector<int> bits = outcome_bits(c, k);
      if ((bits[i] ^ bits[j]) == 0) {
        joint += p[k];
      } else {
        joint -= p[k];
      }
    }
    return joint - single_expectation(box, o1) * single_expectation(box, o2);
  }
  throw PairNotJoint(to_string(o1) + " and " + to_string(o2) + " share no context");
}

Rational q_witness(const Box& box) {
  using O = Observable;
  return covariance(box, O::A0, O::B0) * covariance(box, O::A1, O::B1) -
         covariance(box, O::A1, O::B0) * covariance(box, O::A0, O::B1);
}

SdiCheck sdi_contextuality_check(const Box& box, CovarianceSign sign) {
  SdiCheck s;
  s.q = q_witness(box);
  s.exp_c1 = expectation(box, ContextId::C1);
  s.exp_c2 = expectation(box, ContextId::C2);
  s.cov_de = covariance(box, Observable::D, Observable::E);
  s.q_nonzero = !s.q.is_zero();
  s.c1_is_one = s.exp_c1 == Rational(1);
  s.c2_is_one = s.exp_c2 == Rational(1);
  s.cov_de_ok = sign == CovarianceSign::NonZero ? !s.cov_de.is_zero() : s.cov_de.sign() > 0;
  s.value = s.q_nonzero && s.c1_is_one && s.c2_is_one && s.cov_de_ok;
  const auto line = [](const std::string& what, bool ok) { return what + (ok ? ": ok" : ": fails"); };
  s.reasons.push_back(line("Q = " + s.q.str() + " != 0", s.q_nonzero));
  s.reasons.push_back(line("<A0B1D> = " + s.exp_c1.str() + " == 1", s.c1_is_one));
  s.reasons.push_back(line("<A1B0E> = " + s.exp_c2.str() + " == 1", s.c2_is_one));
  s.reasons.push_back(line("cov(D,E) = " + s.cov_de.str() + (sign == CovarianceSign::NonZero ? " != 0" : " > 0"),
                           s.cov_de_ok));
  return s;
}

Report classify(const Box& box, const ClassifyOptions& options) {
  Report r;
  r.label = box.label();
  r.box = box;
  r.inequality_lhs = inequality_lhs(box);

  const ContextualFraction cf = contextual_fraction(box);
  r.ncf = cf.ncf;
  r.cost = cf.cost;
  r.nc_decomposition = nc_membership(box);
  r.contextual = !r.nc_decomposition.has_value();
  if (r.contextual != (r.cost.sign() > 0)) {
    throw std::logic_error("membership and contextual fraction disagree");
  }

  if (!options.skip_dims) {
    if (!r.contextual) {
      try {
        const DimensionVerdict v = is_supernoncontextual(box, options.search);
        r.supernoncontextual = v.value;
        r.min_nc_dim = v.dims;
      } catch (const Inconclusive&) {
        r.min_nc_dim = min_nc_dimension(box, options.search);
      }
    }
    const BellMarginal m = bell_marginal(box);
    if (lhv_membership(m)) {
      try {
        const DimensionVerdict v = is_superlocal(m, options.search);
        r.superlocal = v.value;
        r.min_lhv_dim = v.dims;
      } catch (const Inconclusive&) {
        r.min_lhv_dim = min_lhv_dimension(m, options.search);
      }
    }
  }

  r.sdi = sdi_contextuality_check(box, options.sign);
  r.q = r.sdi.q;
  r.cov_de = r.sdi.cov_de;
  r.exp_a0b1d = r.sdi.exp_c1;
  r.exp_a1b0e = r.sdi.exp_c2;
  try {
    r.peres_strength = peres_strength(box).ps;
  } catch (const NotDecomposable&) {
    r.peres_strength.reset();
  }
  return r;
}

namespace {

nlohmann::json dims_json(const std::optional<DimensionResult>& d) {
  if (!d) return nullptr;
  nlohmann::json j = {{"d", d->d},
                      {"status", d->status == SearchStatus::Exact ? "exact" : "lower_bound_only"},
                      {"candidates", d->candidates},
                      {"caratheodory_cap", d->cap},
                      {"nodes", d->nodes},
                      {"lp_calls", d->lp_calls}};
  j["decomposition"] = d->decomposition ? d->decomposition->to_json() : nlohmann::json(nullptr);
  return j;
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return v->str();
  } else {
    return *v;
  }
}

std::string opt_csv(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

std::string dims_csv(const std::optional<DimensionResult>& d) {
  if (!d) return ",";
  return std::to_string(d->d) + "," + (d->status == SearchStatus::Exact ? "exact" : "lower_bound_only");
}

}  // namespace

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["nd_valid"] = r.nd_valid;
  j["inequality_lhs"] = r.inequality_lhs.str();
  j["contextual"] = r.contextual;
  j["cost"] = r.cost.str();
  j["ncf"] = r.ncf.str();
  j["nc_decomposition"] = r.nc_decomposition ? r.nc_decomposition->to_json() : nlohmann::json(nullptr);
  j["min_nc_dim"] = dims_json(r.min_nc_dim);
  j["min_lhv_dim"] = dims_json(r.min_lhv_dim);
  j["supernoncontextual"] = opt_json(r.supernoncontextual);
  j["superlocal"] = opt_json(r.superlocal);
  j["Q"] = r.q.str();
  j["cov_DE"] = r.cov_de.str();
  j["exp_A0B1D"] = r.exp_a0b1d.str();
  j["exp_A1B0E"] = r.exp_a1b0e.str();
  j["sdi_contextual"] = r.sdi.value;
  j["sdi_reasons"] = r.sdi.reasons;
  j["peres_strength"] = opt_json(r.peres_strength);
  j["box"] = box_to_json(r.box);
  return j;
}

std::string report_csv_header() {
  return "label,inequality_lhs,contextual,cost,ncf,min_nc_dim,min_nc_status,min_lhv_dim,min_lhv_status,"
         "supernoncontextual,superlocal,Q,cov_DE,exp_A0B1D,exp_A1B0E,sdi_contextual,peres_strength";
}

std::string report_csv_row(const Report& r) {
  std::ostringstream os;
  os << csv_field(r.label) << ',' << r.inequality_lhs << ',' << (r.contextual ? "true" : "false") << ',' << r.cost
     << ',' << r.ncf << ',' << dims_csv(r.min_nc_dim) << ',' << dims_csv(r.min_lhv_dim) << ','
     << opt_csv(r.supernoncontextual) << ',' << opt_csv(r.superlocal) << ',' << r.q << ',' << r.cov_de << ','
     << r.exp_a0b1d << ',' << r.exp_a1b0e << ',' << (r.sdi.value ? "true" : "false") << ','
     << (r.peres_strength ? r.peres_strength->str() : "");
  return os.str();
}

std::string decimal12(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace boxlab
