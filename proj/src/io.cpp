#include "smat/io.hpp"

#include <fstream>
#include <sstream>

#include "smat/errors.hpp"

namespace smat {

namespace {

const char* kKinds[] = {"poly", "nodeset", "vector", "cauchy", "toeplitz", "hankel"};

bool known_kind(const std::string& k) {
  for (const char* s : kKinds)
    if (k == s) return true;
  return false;
}

}  // namespace

std::string format_value(const PrecFloat& v) {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%Ra", v.raw()) < 0) throw Error(ErrorCode::Generic, "format failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

PrecFloat parse_value(const std::string& token) {
  if (token.empty()) throw ParseError("empty numeric token");
  // Base 0 auto-detects the 0x prefix; plain tokens parse as decimal. The
  // parse precision doubles until the conversion is exact, so any dyadic
  // value round-trips and non-dyadic decimals are rejected.
  for (long prec = 128; prec <= (1L << 22); prec *= 2) {
    PrecFloat v(prec);
    mpfr_t tmp;
    mpfr_init2(tmp, prec);
    char* end = nullptr;
    int inexact = mpfr_strtofr(tmp, token.c_str(), &end, 0, MPFR_RNDN);
    bool consumed = end != nullptr && *end == '\0' && end != token.c_str();
    if (!consumed) {
      mpfr_clear(tmp);
      throw ParseError("malformed numeric token: '" + token + "'");
    }
    mpfr_set(v.raw(), tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    if (inexact == 0) return v;
  }
  throw ParseError("value is not exactly dyadic: '" + token +
                   "' (use hex floats like 0x1.8p-2 for lossless input)");
}

InstanceFile parse_instance(std::istream& in) {
  InstanceFile f;
  std::string line;
  long lineno = 0;
  bool have_kind = false, have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      std::string rest;
      std::getline(hs, rest);
      size_t at = rest.find_first_not_of(" \t");
      rest = at == std::string::npos ? "" : rest.substr(at);
      if (key == "kind") {
        f.kind = rest;
        have_kind = true;
      } else if (key == "n") {
        f.n = std::stol(rest);
        have_n = true;
      } else if (key == "tau") {
        f.tau = std::stol(rest);
      } else if (key == "lambda") {
        f.lambda = rest == "exact" ? kExactLambda : std::stol(rest);
      } else {
        f.info.emplace_back(key, rest);
      }
      continue;
    }
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a >> b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two fields (re im)");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    PrecFloat re = parse_value(a), im = parse_value(b);
    long p = std::max(re.prec(), im.prec());
    f.entries.emplace_back(re.at_prec(p), im.at_prec(p));
  }
  if (!have_kind) throw ParseError("missing '#kind' header");
  if (!known_kind(f.kind)) throw ParseError("unknown kind '" + f.kind + "'");
  if (!have_n) throw ParseError("missing '#n' header");
  if (f.n != static_cast<long>(f.entries.size()))
    throw ParseError("declared n=" + std::to_string(f.n) + " but parsed " +
                     std::to_string(f.entries.size()) + " entries");
  if (f.lambda < 1) throw ParseError("lambda must be >= 1");
  return f;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

void serialize_instance(std::ostream& out, const InstanceFile& f) {
  out << "#kind " << f.kind << "\n";
  out << "#n " << f.entries.size() << "\n";
  if (f.tau) out << "#tau " << *f.tau << "\n";
  if (f.lambda >= kExactLambda)
    out << "#lambda exact\n";
  else
    out << "#lambda " << f.lambda << "\n";
  for (const auto& [k, v] : f.info) out << "#" << k << " " << v << "\n";
  for (const auto& z : f.entries)
    out << format_value(z.re) << " " << format_value(z.im) << "\n";
}

void write_instance(const std::string& path, const InstanceFile& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Generic, "cannot write '" + path + "'");
  serialize_instance(out, f);
  if (!out) throw Error(ErrorCode::Generic, "write failed for '" + path + "'");
}

}  // namespace smat
