#include "eqc/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eqc {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '#' || ch == '=';
  });
}

// ---------------------------------------------------------------------------
// System

System System::create(std::vector<MonomerId> monomers, std::vector<NamedPolymer> polymers) {
  std::map<MonomerId, std::size_t> monomer_index;
  for (std::size_t i = 0; i < monomers.size(); ++i) {
    if (!is_valid_name(monomers[i].name)) {
      throw ModelError("invalid monomer name '" + monomers[i].name + "'");
    }
    if (!monomer_index.emplace(monomers[i], i).second) {
      throw ModelError("duplicate monomer '" + monomers[i].name + "'");
    }
  }
  std::set<std::string> names;
  std::set<Polymer> contents;
  std::vector<bool> used(monomers.size(), false);
  for (const auto& p : polymers) {
    if (!is_valid_name(p.name)) throw ModelError("invalid polymer name '" + p.name + "'");
    if (!names.insert(p.name).second) throw ModelError("duplicate polymer name '" + p.name + "'");
    if (p.content.empty()) throw ModelError("empty polymer '" + p.name + "'");
    if (!contents.insert(p.content).second) {
      throw ModelError("polymer '" + p.name + "' duplicates the content of another polymer");
    }
    for (const auto& [m, c] : p.content.counts()) {
      const auto it = monomer_index.find(m);
      if (it == monomer_index.end()) {
        throw ModelError("polymer '" + p.name + "' uses unknown monomer '" + m.name + "'");
      }
      used[it->second] = true;
    }
  }
  for (std::size_t i = 0; i < monomers.size(); ++i) {
    if (!used[i]) throw ModelError("monomer '" + monomers[i].name + "' appears in no polymer");
  }

  System s;
  s.conservation_ = IntMatrix(monomers.size(), polymers.size(), 0);
  for (std::size_t j = 0; j < polymers.size(); ++j) {
    for (const auto& [m, c] : polymers[j].content.counts()) {
      s.conservation_(monomer_index.at(m), j) = c;
    }
  }
  s.monomers_ = std::move(monomers);
  s.polymers_ = std::move(polymers);
  return s;
}

std::optional<std::size_t> System::find_polymer(std::string_view name) const {
  for (std::size_t j = 0; j < polymers_.size(); ++j) {
    if (polymers_[j].name == name) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> System::find_polymer(const Polymer& content) const {
  for (std::size_t j = 0; j < polymers_.size(); ++j) {
    if (polymers_[j].content == content) return j;
  }
  return std::nullopt;
}

std::size_t System::polymer_index(std::string_view name) const {
  if (auto j = find_polymer(name)) return *j;
  throw ModelError("unknown polymer '" + std::string(name) + "'");
}

std::optional<std::size_t> System::find_monomer(std::string_view name) const {
  for (std::size_t i = 0; i < monomers_.size(); ++i) {
    if (monomers_[i].name == name) return i;
  }
  return std::nullopt;
}

bool operator==(const System& a, const System& b) {
  if (a.monomers_ != b.monomers_ || a.polymers_.size() != b.polymers_.size()) return false;
  for (std::size_t j = 0; j < a.polymers_.size(); ++j) {
    if (a.polymers_[j].content != b.polymers_[j].content) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// OnTargetSpec

OnTargetSpec::OnTargetSpec(std::size_t polymer_count, std::map<std::size_t, Rational> mu)
    : polymer_count_(polymer_count), mu_(std::move(mu)) {
  for (const auto& [j, value] : mu_) {
    if (j >= polymer_count_) throw ModelError("on-target index out of range");
    if (value.sign() <= 0 || value > Rational(1)) {
      throw ModelError("concentration exponent " + value.to_string() + " outside (0,1]");
    }
  }
}

OnTargetSpec OnTargetSpec::uniform(std::size_t polymer_count,
                                   std::span<const std::size_t> members) {
  std::map<std::size_t, Rational> mu;
  for (auto j : members) mu.emplace(j, Rational(1));
  return OnTargetSpec(polymer_count, std::move(mu));
}

const Rational& OnTargetSpec::mu(std::size_t j) const {
  const auto it = mu_.find(j);
  if (it == mu_.end()) throw ModelError("polymer index " + std::to_string(j) + " is not on-target");
  return it->second;
}

std::vector<std::size_t> OnTargetSpec::members() const {
  std::vector<std::size_t> out;
  for (const auto& [j, v] : mu_) out.push_back(j);
  return out;
}

std::vector<std::size_t> OnTargetSpec::off_target() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < polymer_count_; ++j) {
    if (!contains(j)) out.push_back(j);
  }
  return out;
}

bool OnTargetSpec::is_uniform() const {
  return std::all_of(mu_.begin(), mu_.end(), [](const auto& kv) { return kv.second == Rational(1); });
}

// ---------------------------------------------------------------------------
// ReactionVec

ReactionVec::ReactionVec(const IntMatrix& conservation, std::vector<std::int64_t> net)
    : net_(std::move(net)) {
  const auto image = multiply(conservation, net_);
  if (std::any_of(image.begin(), image.end(), [](std::int64_t x) { return x != 0; })) {
    throw ModelError("reaction vector does not conserve monomers");
  }
}

bool ReactionVec::is_zero() const {
  return std::all_of(net_.begin(), net_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t ReactionVec::reactant_count() const {
  std::int64_t n = 0;
  for (auto x : net_) n += x > 0 ? x : 0;
  return n;
}

std::int64_t ReactionVec::product_count() const {
  std::int64_t n = 0;
  for (auto x : net_) n += x < 0 ? -x : 0;
  return n;
}

std::int64_t ReactionVec::entropy_loss() const { return reactant_count() - product_count(); }

std::string ReactionVec::render(const System& system) const {
  auto side = [&](int sign) {
    std::string out;
    for (std::size_t j = 0; j < net_.size(); ++j) {
      const std::int64_t c = sign * net_[j];
      if (c <= 0) continue;
      if (!out.empty()) out += " + ";
      if (c > 1) out += std::to_string(c) + " ";
      out += system.polymer_name(j);
    }
    return out.empty() ? std::string("0") : out;
  };
  return side(1) + " -> " + side(-1);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::vector<MonomerId> monomers;
  std::map<std::string, std::size_t> monomer_line;
  std::vector<NamedPolymer> polymers;
  std::map<std::string, std::size_t> polymer_line;
  std::map<Polymer, std::string> polymer_by_content;
  std::vector<std::pair<std::string, Rational>> ontarget;
  std::map<std::string, std::size_t> ontarget_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const auto tokens = split_ws(line);
    const std::string_view keyword = tokens[0];

    if (keyword == "monomer") {
      if (tokens.size() != 2 || !is_valid_name(tokens[1])) {
        throw ParseError(line_no, "expected 'monomer <name>'");
      }
      std::string name(tokens[1]);
      if (monomer_line.contains(name)) throw ParseError(line_no, "duplicate monomer '" + name + "'");
      monomer_line.emplace(name, line_no);
      monomers.push_back(MonomerId{name});
    } else if (keyword == "polymer") {
      const std::string_view rest = trim(line.substr(keyword.size()));
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'polymer <Name> = <monomer> ...'");
      const std::string_view name_part = trim(rest.substr(0, eq));
      if (!is_valid_name(name_part)) throw ParseError(line_no, "invalid polymer name");
      std::string name(name_part);
      if (polymer_line.contains(name)) throw ParseError(line_no, "duplicate polymer '" + name + "'");
      const auto body = split_ws(rest.substr(eq + 1));
      if (body.empty()) throw ParseError(line_no, "empty polymer '" + name + "'");
      Polymer content;
      for (auto tok : body) {
        if (!is_valid_name(tok)) throw ParseError(line_no, "malformed monomer token '" + std::string(tok) + "'");
        if (!monomer_line.contains(std::string(tok))) {
          throw ParseError(line_no, "unknown monomer '" + std::string(tok) + "'");
        }
        content.insert(MonomerId{std::string(tok)});
      }
      if (const auto it = polymer_by_content.find(content); it != polymer_by_content.end()) {
        throw ParseError(line_no, "polymer '" + name + "' has the same content as '" + it->second + "'");
      }
      polymer_by_content.emplace(content, name);
      polymer_line.emplace(name, line_no);
      polymers.push_back(NamedPolymer{name, std::move(content)});
    } else if (keyword == "ontarget") {
      if (tokens.size() != 3 || !tokens[2].starts_with("mu=")) {
        throw ParseError(line_no, "expected 'ontarget <Name> mu=<p>/<q>'");
      }
      std::string name(tokens[1]);
      if (!polymer_line.contains(name)) throw ParseError(line_no, "unknown polymer '" + name + "'");
      if (ontarget_line.contains(name)) throw ParseError(line_no, "duplicate ontarget '" + name + "'");
      Rational mu;
      try {
        mu = Rational::parse(tokens[2].substr(3));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      if (mu.sign() <= 0 || mu > Rational(1)) {
        throw ParseError(line_no, "exponent " + mu.to_string() + " outside (0,1]");
      }
      ontarget_line.emplace(name, line_no);
      ontarget.emplace_back(name, mu);
    } else {
      throw ParseError(line_no, "unknown statement '" + std::string(keyword) + "'");
    }
    if (eol == text.size()) break;
  }

  std::set<std::string> used;
  for (const auto& p : polymers)
    for (const auto& [m, c] : p.content.counts()) used.insert(m.name);
  for (const auto& m : monomers) {
    if (!used.contains(m.name)) {
      throw ParseError(monomer_line.at(m.name), "monomer '" + m.name + "' appears in no polymer");
    }
  }

  Problem out;
  try {
    out.system = System::create(std::move(monomers), std::move(polymers));
  } catch (const ModelError& e) {
    throw ParseError(line_no, e.what());
  }
  std::map<std::size_t, Rational> mu;
  for (const auto& [name, value] : ontarget) mu.emplace(out.system.polymer_index(name), value);
  out.spec = OnTargetSpec(out.system.polymer_count(), std::move(mu));
  return out;
}

System parse_system(std::string_view text) { return parse_problem(text).system; }

std::string render_system(const System& system) {
  std::ostringstream os;
  for (const auto& m : system.monomers()) os << "monomer " << m.name << "\n";
  for (const auto& p : system.polymers()) {
    os << "polymer " << p.name << " =";
    for (const auto& [m, c] : p.content.counts())
      for (std::int64_t k = 0; k < c; ++k) os << " " << m.name;
    os << "\n";
  }
  return os.str();
}

std::string render_problem(const System& system, const OnTargetSpec& spec) {
  std::string out = render_system(system);
  for (const auto& [j, mu] : spec.exponents()) {
    out += "ontarget " + system.polymer_name(j) + " mu=" + mu.to_string() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// On-target validation

std::vector<std::vector<BigInt>> on_target_kernel(const System& system, const OnTargetSpec& spec) {
  const auto members = spec.members();
  return integer_kernel_basis(system.conservation().select_columns(members));
}

ValidationReport check_on_target(const System& system, const OnTargetSpec& spec,
                                 std::span<const ReactionVec> basis,
                                 const std::optional<std::vector<std::vector<BigInt>>>& kernel_override) {
  ValidationReport report;
  for (auto j : spec.off_target()) {
    const bool produced =
        std::any_of(basis.begin(), basis.end(), [j](const ReactionVec& h) { return h[j] < 0; });
    if (!produced) report.unproducible.push_back(j);
  }
  report.producible = report.unproducible.empty();

  const auto members = spec.members();
  const auto kernel = kernel_override ? *kernel_override : on_target_kernel(system, spec);
  for (const auto& w : kernel) {
    if (w.size() != members.size()) throw std::invalid_argument("kernel vector has wrong length");
    Rational dot(0);
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (w[k] != 0) dot += spec.mu(members[k]) * Rational(w[k], BigInt(1));
    }
    if (!dot.is_zero()) {
      report.balanced = false;
      std::vector<std::int64_t> full(system.polymer_count(), 0);
      for (std::size_t k = 0; k < members.size(); ++k) full[members[k]] = w[k].get_si();
      report.violating_reaction = std::move(full);
      break;
    }
  }
  return report;
}

}  // namespace eqc
