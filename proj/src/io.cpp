#include "amd/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace amd {

namespace {

std::string strip_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

RingPtr parse_header(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  if (word != "ring") throw Error("ideal file: expected a 'ring' header, got '" + line + "'");
  std::vector<std::string> names;
  std::uint32_t prime = kDefaultPrime;
  TermOrder order;
  bool have_mod = false;
  while (in >> word) {
    if (word == "mod") {
      long long p = 0;
      if (!(in >> p) || p <= 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error("ideal file: 'mod' needs a prime 2 < p < 2^31");
      prime = static_cast<std::uint32_t>(p);
      have_mod = true;
    } else if (word == "order") {
      if (!(in >> word)) throw Error("ideal file: 'order' needs a name");
      order = TermOrder::parse(word);
    } else {
      if (have_mod) throw Error("ideal file: variable names must precede 'mod'");
      names.push_back(word);
    }
  }
  if (names.empty()) throw Error("ideal file: the ring has no variables");
  return make_ring(names, prime, order);
}

}  // namespace

GradedIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  RingPtr ring;
  std::vector<Polynomial> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    try {
      if (!ring) {
        ring = parse_header(s);
        continue;
      }
      Polynomial f = parse_polynomial(s, ring);
      if (!f.is_homogeneous()) throw Error("generator is not homogeneous");
      gens.push_back(std::move(f));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!ring) throw Error("ideal file: missing 'ring' header");
  return GradedIdeal(ring, std::move(gens));
}

GradedIdeal read_ideal_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_ideal(ss.str());
}

std::string format_ideal(const GradedIdeal& I) {
  const Ring& R = *I.ring();
  std::ostringstream os;
  os << "ring";
  for (const auto& n : R.names()) os << " " << n;
  os << " mod " << R.prime() << " order " << R.order().name() << "\n";
  for (const auto& g : I.generators()) os << g.str() << "\n";
  return os.str();
}

std::string ideal_to_json(const GradedIdeal& I) {
  const Ring& R = *I.ring();
  nlohmann::ordered_json j;
  j["ring"] = {{"variables", R.names()}, {"prime", R.prime()}, {"order", R.order().name()}};
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : I.generators()) gens.push_back(g.str());
  j["generators"] = gens;
  return j.dump(2);
}

}  // namespace amd
