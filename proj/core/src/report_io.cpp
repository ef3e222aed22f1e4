#include "hypspec/report_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypspec {

namespace {

constexpr int kSchemaVersion = 1;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

ChannelTag tag_from(const std::string& s) {
  if (s == "I") return ChannelTag::I;
  if (s == "II") return ChannelTag::II;
  if (s == "III") return ChannelTag::III;
  throw std::runtime_error("report parse: bad channel tag '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  if (s == "consistent") return Verdict::Consistent;
  if (s == "inconsistent") return Verdict::Inconsistent;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw std::runtime_error("report parse: bad verdict '" + s + "'");
}

HarmonicClass harmonic_class_from(const std::string& s) {
  if (s == "trivial") return HarmonicClass::Trivial;
  if (s == "one_dimensional") return HarmonicClass::OneDimensional;
  if (s == "infinite_dimensional") return HarmonicClass::InfiniteDimensional;
  throw std::runtime_error("report parse: bad classification '" + s + "'");
}

TailClass tail_class_from(const std::string& s) {
  if (s == "exponential_growth") return TailClass::ExponentialGrowth;
  if (s == "exponential_decay") return TailClass::ExponentialDecay;
  if (s == "power") return TailClass::Power;
  if (s == "constant") return TailClass::Constant;
  throw std::runtime_error("report parse: bad tail class '" + s + "'");
}

ModeKind kind_from(const std::string& s) {
  if (s == "coclosed") return ModeKind::Coclosed;
  if (s == "closed") return ModeKind::Closed;
  throw std::runtime_error("report parse: bad mode kind '" + s + "'");
}

void expect(std::istream& is, const std::string& want) {
  std::string got;
  if (!(is >> got) || got != want) {
    throw std::runtime_error("report parse: expected '" + want + "', got '" + got + "'");
  }
}

void serialize_verdict_line(std::ostream& os, const IntegralVerdict& v, const char* key) {
  os << key << ' ' << (v.convergent ? "convergent" : "divergent") << ' ' << to_string(v.tail_class)
     << " finite_part " << fmt(v.finite_part) << " value " << fmt(v.value) << " tail_bound "
     << fmt(v.tail_bound) << " t_quad " << fmt(v.t_quad) << '\n';
}

IntegralVerdict parse_verdict_line(std::istream& is) {
  IntegralVerdict v;
  std::string word;
  is >> word;
  v.convergent = (word == "convergent");
  if (!v.convergent && word != "divergent") {
    throw std::runtime_error("report parse: bad integral kind '" + word + "'");
  }
  is >> word;
  v.tail_class = tail_class_from(word);
  expect(is, "finite_part");
  is >> v.finite_part;
  expect(is, "value");
  is >> v.value;
  expect(is, "tail_bound");
  is >> v.tail_bound;
  expect(is, "t_quad");
  is >> v.t_quad;
  return v;
}

}  // namespace

std::string to_string(ChannelTag tag) {
  switch (tag) {
    case ChannelTag::I: return "I";
    case ChannelTag::II: return "II";
    case ChannelTag::III: return "III";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(HarmonicClass cls) {
  switch (cls) {
    case HarmonicClass::Trivial: return "trivial";
    case HarmonicClass::OneDimensional: return "one_dimensional";
    case HarmonicClass::InfiniteDimensional: return "infinite_dimensional";
  }
  return "?";
}

std::string to_string(TailClass cls) {
  switch (cls) {
    case TailClass::ExponentialGrowth: return "exponential_growth";
    case TailClass::ExponentialDecay: return "exponential_decay";
    case TailClass::Power: return "power";
    case TailClass::Constant: return "constant";
  }
  return "?";
}

std::string to_string(ModeKind kind) {
  return kind == ModeKind::Coclosed ? "coclosed" : "closed";
}

void serialize(std::ostream& os, const SpectrumReport& r) {
  os << "hypspec-report spectrum " << kSchemaVersion << '\n';
  os << "profile " << r.profile_name << '\n';
  os << "dim " << r.dim << '\n';
  os << "degree " << r.degree << '\n';
  os << "predicted_start " << fmt(r.predicted.interval_start) << '\n';
  os << "isolated_zero " << (r.predicted.includes_isolated_zero ? 1 : 0) << '\n';
  os << "report_tol " << fmt(r.report_tol) << '\n';
  os << "zero_in_essential " << (r.zero_in_essential ? 1 : 0) << '\n';
  os << "aggregate_lower " << fmt(r.aggregate_lower) << '\n';
  os << "aggregate_upper " << fmt(r.aggregate_upper) << '\n';
  os << "verdict " << to_string(r.verdict) << '\n';
  for (const ChannelSweep& ch : r.channels) {
    os << "channel " << to_string(ch.tag) << " threshold " << fmt(ch.threshold)
       << " aggregate_lower " << fmt(ch.aggregate_lower) << " aggregate_upper "
       << fmt(ch.aggregate_upper) << " modes " << ch.modes.size() << '\n';
    for (const ModeBracket& mb : ch.modes) {
      const SphereMode& m = mb.mode;
      const EssentialBracket& b = mb.bracket;
      os << "mode " << to_string(m.kind) << ' ' << m.degree << ' ' << m.index << ' '
         << fmt(m.lambda) << ' ' << m.multiplicity << " lower " << fmt(b.lower) << " upper "
         << fmt(b.upper) << " cut " << fmt(b.cut) << " length " << fmt(b.length) << " points "
         << b.points << " converged " << (b.converged ? 1 : 0) << " inconclusive "
         << (b.inconclusive ? 1 : 0) << '\n';
      for (const auto& [L, upper] : b.upper_per_length) {
        os << "length " << fmt(L) << ' ' << fmt(upper) << '\n';
      }
    }
  }
  for (const std::string& note : r.notes) os << "note " << note << '\n';
  os << "end\n";
}

SpectrumReport parse_spectrum_report(std::istream& is) {
  SpectrumReport r;
  std::string word;
  expect(is, "hypspec-report");
  expect(is, "spectrum");
  int schema = 0;
  is >> schema;
  if (schema != kSchemaVersion) throw std::runtime_error("report parse: unsupported schema version");

  int zero_flag = 0, iso = 0;
  expect(is, "profile");
  is >> r.profile_name;
  expect(is, "dim");
  is >> r.dim;
  expect(is, "degree");
  is >> r.degree;
  expect(is, "predicted_start");
  is >> r.predicted.interval_start;
  expect(is, "isolated_zero");
  is >> iso;
  r.predicted.includes_isolated_zero = iso != 0;
  expect(is, "report_tol");
  is >> r.report_tol;
  expect(is, "zero_in_essential");
  is >> zero_flag;
  r.zero_in_essential = zero_flag != 0;
  expect(is, "aggregate_lower");
  is >> r.aggregate_lower;
  expect(is, "aggregate_upper");
  is >> r.aggregate_upper;
  expect(is, "verdict");
  is >> word;
  r.verdict = verdict_from(word);

  std::string line;
  std::getline(is, line);  // consume rest of verdict line
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "end") break;
    if (key == "channel") {
      ChannelSweep ch;
      ls >> word;
      ch.tag = tag_from(word);
      expect(ls, "threshold");
      ls >> ch.threshold;
      expect(ls, "aggregate_lower");
      ls >> ch.aggregate_lower;
      expect(ls, "aggregate_upper");
      ls >> ch.aggregate_upper;
      std::size_t count = 0;
      expect(ls, "modes");
      ls >> count;
      ch.modes.reserve(count);
      r.channels.push_back(std::move(ch));
    } else if (key == "mode") {
      if (r.channels.empty()) throw std::runtime_error("report parse: mode before channel");
      ModeBracket mb;
      ls >> word;
      mb.mode.kind = kind_from(word);
      ls >> mb.mode.degree >> mb.mode.index >> mb.mode.lambda >> mb.mode.multiplicity;
      mb.mode.ambient_dim = r.dim;
      EssentialBracket& b = mb.bracket;
      int conv = 0, inc = 0;
      expect(ls, "lower");
      ls >> b.lower;
      expect(ls, "upper");
      ls >> b.upper;
      expect(ls, "cut");
      ls >> b.cut;
      expect(ls, "length");
      ls >> b.length;
      expect(ls, "points");
      ls >> b.points;
      expect(ls, "converged");
      ls >> conv;
      expect(ls, "inconclusive");
      ls >> inc;
      b.converged = conv != 0;
      b.inconclusive = inc != 0;
      r.channels.back().modes.push_back(std::move(mb));
    } else if (key == "length") {
      if (r.channels.empty() || r.channels.back().modes.empty()) {
        throw std::runtime_error("report parse: length line before mode");
      }
      double L = 0, upper = 0;
      ls >> L >> upper;
      r.channels.back().modes.back().bracket.upper_per_length.emplace_back(L, upper);
    } else if (key == "note") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
      r.notes.push_back(rest);
    } else {
      throw std::runtime_error("report parse: unknown key '" + key + "'");
    }
  }
  return r;
}

void serialize(std::ostream& os, const HarmonicReport& r) {
  os << "hypspec-report harmonic " << kSchemaVersion << '\n';
  os << "dim " << r.dim << '\n';
  os << "degree " << r.degree << '\n';
  os << "classification " << to_string(r.classification) << '\n';
  serialize_verdict_line(os, r.volume, "volume");
  serialize_verdict_line(os, r.middle, "middle");
  os << "conformal_radius " << (r.conformal_radius ? fmt(*r.conformal_radius) : "none") << '\n';
  os << "zero_in_point " << (r.zero_in_point_spectrum ? 1 : 0) << '\n';
  os << "zero_in_essential " << (r.zero_in_essential_spectrum ? 1 : 0) << '\n';
  os << "end\n";
}

HarmonicReport parse_harmonic_report(std::istream& is) {
  HarmonicReport r;
  std::string word;
  expect(is, "hypspec-report");
  expect(is, "harmonic");
  int schema = 0;
  is >> schema;
  if (schema != kSchemaVersion) throw std::runtime_error("report parse: unsupported schema version");
  expect(is, "dim");
  is >> r.dim;
  expect(is, "degree");
  is >> r.degree;
  expect(is, "classification");
  is >> word;
  r.classification = harmonic_class_from(word);
  expect(is, "volume");
  r.volume = parse_verdict_line(is);
  expect(is, "middle");
  r.middle = parse_verdict_line(is);
  expect(is, "conformal_radius");
  is >> word;
  if (word != "none") r.conformal_radius = std::stod(word);
  int flag = 0;
  expect(is, "zero_in_point");
  is >> flag;
  r.zero_in_point_spectrum = flag != 0;
  expect(is, "zero_in_essential");
  is >> flag;
  r.zero_in_essential_spectrum = flag != 0;
  expect(is, "end");
  return r;
}

bool operator==(const EssentialBracket& a, const EssentialBracket& b) {
  return a.lower == b.lower && a.upper == b.upper && a.cut == b.cut && a.length == b.length &&
         a.points == b.points && a.converged == b.converged && a.inconclusive == b.inconclusive &&
         a.upper_per_length == b.upper_per_length;
}

bool operator==(const SphereMode& a, const SphereMode& b) {
  return a.ambient_dim == b.ambient_dim && a.degree == b.degree && a.kind == b.kind &&
         a.index == b.index && a.lambda == b.lambda && a.multiplicity == b.multiplicity;
}

bool operator==(const ModeBracket& a, const ModeBracket& b) {
  return a.mode == b.mode && a.bracket == b.bracket;
}

bool operator==(const ChannelSweep& a, const ChannelSweep& b) {
  return a.tag == b.tag && a.threshold == b.threshold && a.modes == b.modes &&
         a.aggregate_lower == b.aggregate_lower && a.aggregate_upper == b.aggregate_upper;
}

bool operator==(const SpectrumReport& a, const SpectrumReport& b) {
  return a.profile_name == b.profile_name && a.dim == b.dim && a.degree == b.degree &&
         a.predicted.interval_start == b.predicted.interval_start &&
         a.predicted.includes_isolated_zero == b.predicted.includes_isolated_zero &&
         a.report_tol == b.report_tol && a.channels == b.channels &&
         a.aggregate_lower == b.aggregate_lower && a.aggregate_upper == b.aggregate_upper &&
         a.zero_in_essential == b.zero_in_essential && a.verdict == b.verdict && a.notes == b.notes;
}

bool operator==(const IntegralVerdict& a, const IntegralVerdict& b) {
  return a.convergent == b.convergent && a.tail_class == b.tail_class &&
         a.finite_part == b.finite_part && a.value == b.value && a.tail_bound == b.tail_bound &&
         a.t_quad == b.t_quad;
}

bool operator==(const HarmonicReport& a, const HarmonicReport& b) {
  return a.dim == b.dim && a.degree == b.degree && a.classification == b.classification &&
         a.volume == b.volume && a.middle == b.middle && a.conformal_radius == b.conformal_radius &&
         a.zero_in_point_spectrum == b.zero_in_point_spectrum &&
         a.zero_in_essential_spectrum == b.zero_in_essential_spectrum;
}

void print_human(std::ostream& os, const SpectrumReport& r) {
  os << "essential spectrum of the " << r.degree << "-form Laplacian, profile " << r.profile_name
     << ", N = " << r.dim << "\n";
  os << "  predicted: ";
  if (r.predicted.includes_isolated_zero) os << "{0} u ";
  os << "[" << r.predicted.interval_start << ", inf)\n";
  for (const ChannelSweep& ch : r.channels) {
    os << "  channel " << to_string(ch.tag) << " (threshold " << ch.threshold << ")\n";
    for (const ModeBracket& mb : ch.modes) {
      os << "    lambda = " << mb.mode.lambda << ": bracket [" << mb.bracket.lower << ", "
         << mb.bracket.upper << "]" << (mb.bracket.converged ? "" : "  (not converged)") << "\n";
    }
  }
  os << "  aggregate bracket: [" << r.aggregate_lower << ", " << r.aggregate_upper << "]\n";
  if (r.zero_in_essential) os << "  isolated zero: present (harmonic classification)\n";
  os << "  verdict: " << to_string(r.verdict) << "\n";
}

void print_human(std::ostream& os, const HarmonicReport& r) {
  os << "square-integrable harmonic " << r.degree << "-forms, N = " << r.dim << ": "
     << to_string(r.classification) << "\n";
  os << "  volume integral: " << (r.volume.convergent ? "convergent" : "divergent") << " ("
     << to_string(r.volume.tail_class) << ")\n";
  os << "  middle integral: " << (r.middle.convergent ? "convergent" : "divergent") << " ("
     << to_string(r.middle.tail_class) << ")";
  if (r.middle.convergent) os << ", value " << r.middle.value;
  os << "\n";
  if (r.conformal_radius) os << "  conformal radius: " << *r.conformal_radius << "\n";
  os << "  zero in point spectrum: " << (r.zero_in_point_spectrum ? "yes" : "no")
     << "; in essential spectrum: " << (r.zero_in_essential_spectrum ? "yes" : "no") << "\n";
}

void write_bracket_csv(std::ostream& os, const SpectrumReport& r) {
  os << "channel,lambda,L,lower,upper\n";
  for (const ChannelSweep& ch : r.channels) {
    for (const ModeBracket& mb : ch.modes) {
      for (const auto& [L, upper] : mb.bracket.upper_per_length) {
        os << to_string(ch.tag) << ',' << fmt(mb.mode.lambda) << ',' << fmt(L) << ','
           << fmt(mb.bracket.lower) << ',' << fmt(upper) << '\n';
      }
    }
  }
}

}  // namespace hypspec
