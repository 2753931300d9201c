#pragma once

#include <cstdio>
#include <string>

#include "wordstat/lambda.hpp"
#include "wordstat/profile.hpp"

namespace wordstat {

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

} // namespace detail

/// Header and column layout are part of the file contract.
inline std::string sigma_profile_csv(const Profile& prof) {
  std::string out = "n,sigma,sigma_over_n2,sigma_over_n3\n";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double n = static_cast<double>(prof.checkpoints[i]);
    const double v = to_double(prof.values[i]);
    out += std::to_string(prof.checkpoints[i]);
    out += ',';
    out += to_string(prof.values[i]);
    out += ',';
    out += detail::fmt_double(v / (n * n));
    out += ',';
    out += detail::fmt_double(v / (n * n * n));
    out += '\n';
  }
  return out;
}

inline std::string lambda_profile_csv(const LambdaProfile& lp) {
  std::string out = "n,lambda,lambda_over_n3,witness_eta_len,witness_exponent,witness_pos\n";
  for (std::size_t i = 0; i < lp.profile.size(); ++i) {
    const double n = static_cast<double>(lp.profile.checkpoints[i]);
    const PowerWitness& wit = lp.witnesses[i];
    out += std::to_string(lp.profile.checkpoints[i]);
    out += ',';
    out += to_string(lp.profile.values[i]);
    out += ',';
    out += detail::fmt_double(to_double(lp.profile.values[i]) / (n * n * n));
    out += ',';
    out += std::to_string(wit.eta_length);
    out += ',';
    out += std::to_string(wit.exponent);
    out += ',';
    out += std::to_string(wit.position);
    out += '\n';
  }
  return out;
}

} // namespace wordstat
