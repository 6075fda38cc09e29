#include "render.hpp"

#include <sstream>
#include <stdexcept>

namespace smod::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "tsv") return Format::Tsv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format " + name);
}

namespace {

std::string s(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string verdict(const json& j) {
  std::string out = "residual " + s(j["residual"]) + " (tolerance " + s(j["tolerance"]) + ") ";
  return out + (j["pass"].get<bool>() ? "PASS" : "FAIL");
}

std::string sign_cell(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

void flatten(std::ostringstream& os, const std::string& prefix, const json& v) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(os, prefix.empty() ? it.key() : prefix + "." + it.key(), *it);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(os, prefix + "[" + std::to_string(i) + "]", v[i]);
  } else {
    os << prefix << '\t' << s(v) << '\n';
  }
}

std::string text_forms(const json& j) {
  std::ostringstream os;
  os << "Reduced forms with discriminant " << s(j["discriminant"]) << ", h = " << s(j["class_number"]) << "\n";
  int i = 1;
  for (const auto& f : j["forms"]) os << "  " << i++ << ". " << s(f["text"]) << "\n";
  return os.str();
}

std::string text_g2n(const json& j) {
  std::ostringstream os;
  std::string g = "g_" + s(j["index"]);
  os << g << " = " << s(j["simplified"]["pretty"]) << "\n";
  os << "  Pell product  " << s(j["product"]["pretty"]) << "\n";
  os << "  h(-4·" << s(j["index"]) << ") = " << s(j["h"]) << "\n";
  if (j.contains("sixth_power")) os << "  " << g << "⁶ = " << s(j["sixth_power"]) << "\n";
  os << "  value     " << s(j["value"]) << "\n";
  os << "  q-series  " << s(j["qseries"]) << "\n";
  os << "  " << verdict(j) << "\n";
  return os.str();
}

std::string text_kn(const json& j) {
  std::ostringstream os;
  std::string n = s(j["n"]);
  if (j.contains("k_exact")) os << "k_" << n << " = " << s(j["k_exact"]["pretty"]) << "\n";
  if (j.contains("witness")) {
    const json& w = j["witness"];
    os << "  AVCAL split\n";
    for (const char* key : {"S1", "S2", "alpha", "beta", "sqrt_alpha", "sqrt_beta", "a", "b", "c", "d"})
      os << "    " << key << " = " << s(w[key]) << "\n";
    os << "  x1 = " << s(j["k_avcal"]["pretty"]) << "\n";
  }
  os << "  k_" << n << "     " << s(j["k"]) << "\n";
  os << "  alpha_" << n << " " << s(j["alpha"]) << "\n";
  os << "  F(1-α)/F(α) - √" << n << ": " << verdict(j) << "\n";
  return os.str();
}

std::string text_tables(const json& j) {
  std::ostringstream os;
  os << "Jacobi symbols (δ / A + C), m = " << s(j["m"]) << "\n";
  os << "  form\tmod";
  for (const auto& d : j["deltas"]) os << '\t' << s(d);
  os << "\n";
  for (const auto& r : j["jacobi"]) {
    os << "  " << s(r["form"]["text"]) << '\t' << s(r["modulus"]);
    for (const auto& c : r["chi"]) os << '\t' << sign_cell(c.get<int>());
    os << "\n";
  }
  os << "Coefficient differences\n  δ";
  for (const auto& p : j["pairs"]) os << "\t(" << s(p["first"]["text"]) << ") − (" << s(p["second"]["text"]) << ")";
  os << "\n";
  for (std::size_t i = 0; i < j["differences"].size(); ++i) {
    os << "  " << s(j["deltas"][i]);
    for (const auto& c : j["differences"][i]) os << '\t' << sign_cell(c.get<int>());
    os << "\n";
  }
  os << "Surviving sums\n";
  for (const auto& r : j["survivors"]) {
    os << "  δ = " << s(r["delta"]) << ", δ' = " << s(r["delta_prime"]) << ": K = " << s(r["K_delta"])
       << ", K' = " << s(r["K_delta_prime"]) << ", ε = " << s(r["unit"]) << "  [";
    for (std::size_t i = 0; i < r["coefficients"].size(); ++i) {
      if (i) os << ", ";
      os << sign_cell(r["coefficients"][i].get<int>()) << "·ln g_" << s(j["m"]) << "/" << s(r["pair_A"][i]) << "²";
    }
    os << "]\n";
  }
  return os.str();
}

std::string text_jpoly(const json& j) {
  std::ostringstream os;
  os << "Class polynomial for discriminant " << s(j["discriminant"]) << " at " << s(j["digits"]) << " digits\n";
  if (j.contains("error")) {
    os << "  " << s(j["error"]) << "\n";
    return os.str();
  }
  const json& c = j["coefficients"];
  std::size_t deg = c.size() - 1;
  for (std::size_t i = 0; i < c.size(); ++i) os << "  a" << i << " (x^" << deg - i << ")  " << s(c[i]) << "\n";
  os << "  " << verdict(j) << "\n";
  return os.str();
}

std::string text_verify(const json& j) {
  std::ostringstream os;
  std::string check = s(j["check"]);
  if (check == "ratio") {
    os << "F(1-α)/F(α) = √" << s(j["n"]) << " with α from the " << s(j["source"]) << " value\n";
    os << "  α = " << s(j["alpha"]) << "\n";
  } else if (check == "formula-g") {
    os << "Formula G for (" << s(j["A"]) << ", " << s(j["C"]) << "), m = " << s(j["m"]) << "\n";
  } else if (check == "grenzformel") {
    const json& f = j["form"];
    os << "Limit formula for (" << s(f["A"]) << ", " << s(f["B"]) << ", " << s(f["C"]) << "), m = " << s(j["m"])
       << "\n  constant term " << s(j["constant"]) << "\n";
  } else {
    os << "L(1, χ_" << s(j["delta"]) << ") = " << s(j["closed_form"]) << "\n";
    os << "  finite sum   " << s(j["sum"]) << "\n";
    os << "  closed form  " << s(j["closed_value"]) << "\n";
  }
  os << "  " << verdict(j) << "\n";
  return os.str();
}

}  // namespace

std::string render(const json& data, Format fmt) {
  if (fmt == Format::Json) return data.dump(2) + "\n";
  std::string cmd = data.value("command", "");
  if (fmt == Format::Tsv) {
    std::ostringstream os;
    if (cmd == "forms") {
      os << "a\tb\tc\tform\n";
      for (const auto& f : data["forms"]) os << s(f["a"]) << '\t' << s(f["b"]) << '\t' << s(f["c"]) << '\t' << s(f["text"]) << '\n';
    } else {
      flatten(os, "", data);
    }
    return os.str();
  }
  if (cmd == "forms") return text_forms(data);
  if (cmd == "g2n") return text_g2n(data);
  if (cmd == "kn") return text_kn(data);
  if (cmd == "tables") return text_tables(data);
  if (cmd == "jpoly") return text_jpoly(data);
  if (cmd == "verify") return text_verify(data);
  std::ostringstream os;
  flatten(os, "", data);
  return os.str();
}

}  // namespace smod::cli
