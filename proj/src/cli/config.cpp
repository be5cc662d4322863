#include "atomlens/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "atomlens/constants.hpp"

namespace atomlens::cli {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kPresetFiles[];
extern const std::size_t kPresetFileCount;
}  // namespace detail

using json = nlohmann::json;

namespace {

std::string format_message(const std::string& source, int line, int column,
                           const std::string& field, const std::string& reason) {
  std::ostringstream os;
  os << source << ':' << line << ':' << column << ": ";
  if (!field.empty()) os << field << ": ";
  os << reason;
  return os.str();
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, int column, std::string field,
                         std::string reason)
    : std::runtime_error(format_message(source, line, column, field, reason)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      field_(std::move(field)),
      reason_(std::move(reason)) {}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::field_scan: return "field-scan";
    case Mode::atom_focus: return "atom-focus";
    case Mode::focal_sweep: return "focal-sweep";
  }
  return "?";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

atom_optics::LensSetup AtomFocusConfig::setup_for(const PulseEntry& entry) const {
  atom_optics::LensSetup s = setup;
  s.pulse = entry.pulse;
  return s;
}

namespace {

struct Location {
  int line = 1;
  int column = 1;
};

std::string pointer_escape(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// Maps each JSON pointer to the position where its value starts. Runs on
// text that nlohmann already accepted, so it only needs to track structure.
class PositionScanner {
 public:
  PositionScanner(std::string_view text, std::string source)
      : s_(text), source_(std::move(source)) {}

  std::map<std::string, Location> run() {
    value("");
    return std::move(out_);
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  Location here() const { return {line_, static_cast<int>(i_ - line_start_) + 1}; }

  void skip_ws() {
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '\n') {
        ++line_;
        line_start_ = i_ + 1;
      } else if (c != ' ' && c != '\t' && c != '\r') {
        break;
      }
      ++i_;
    }
  }

  std::string string() {
    std::string r;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        const char e = s_[i_ + 1];
        i_ += 2;
        switch (e) {
          case 'n': r += '\n'; break;
          case 't': r += '\t'; break;
          case 'r': r += '\r'; break;
          case 'b': r += '\b'; break;
          case 'f': r += '\f'; break;
          case 'u':
            r += "\\u";
            r += s_.substr(i_, 4);
            i_ += 4;
            break;
          default: r += e;
        }
        continue;
      }
      r += s_[i_++];
    }
    ++i_;
    return r;
  }

  void value(const std::string& path) {
    skip_ws();
    out_.emplace(path, here());
    const char c = peek();
    if (c == '{') {
      ++i_;
      std::set<std::string> seen;
      skip_ws();
      if (peek() == '}') {
        ++i_;
        return;
      }
      while (i_ < s_.size()) {
        skip_ws();
        const Location key_at = here();
        const std::string key = string();
        const std::string child = path + "/" + pointer_escape(key);
        if (!seen.insert(key).second) {
          throw ConfigError(source_, key_at.line, key_at.column, child, "duplicate key");
        }
        skip_ws();
        ++i_;  // ':'
        value(child);
        skip_ws();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        ++i_;  // '}'
        break;
      }
    } else if (c == '[') {
      ++i_;
      skip_ws();
      if (peek() == ']') {
        ++i_;
        return;
      }
      for (std::size_t n = 0; i_ < s_.size(); ++n) {
        value(path + "/" + std::to_string(n));
        skip_ws();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        ++i_;  // ']'
        break;
      }
    } else if (c == '"') {
      string();
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ']' && s_[i_] != '}' &&
             s_[i_] != ' ' && s_[i_] != '\n' && s_[i_] != '\t' && s_[i_] != '\r') {
        ++i_;
      }
    }
  }

  std::string_view s_;
  std::string source_;
  std::size_t i_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  std::map<std::string, Location> out_;
};

class Context {
 public:
  Context(std::string source, std::map<std::string, Location> locations)
      : source_(std::move(source)), locations_(std::move(locations)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& reason) const {
    std::string p = path;
    for (;;) {
      auto it = locations_.find(p);
      if (it != locations_.end()) {
        throw ConfigError(source_, it->second.line, it->second.column, path.empty() ? "/" : path,
                          reason);
      }
      if (p.empty()) break;
      p.erase(p.rfind('/'));
    }
    throw ConfigError(source_, 1, 1, path.empty() ? "/" : path, reason);
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::map<std::string, Location> locations_;
};

class Value;

// Object view that remembers which keys were read so leftovers can be
// rejected as unknown.
class Object {
 public:
  Object(const json& j, std::string path, const Context& ctx);

  bool has(const std::string& key) const { return j_.contains(key); }
  Value get(const std::string& key);
  std::optional<Value> find(const std::string& key);
  const std::string& path() const { return path_; }
  const Context& ctx() const { return ctx_; }
  void finish() const;

 private:
  const json& j_;
  std::string path_;
  const Context& ctx_;
  std::set<std::string> used_;
};

class Value {
 public:
  Value(const json& j, std::string path, const Context& ctx)
      : j_(j), path_(std::move(path)), ctx_(ctx) {}

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& reason) const { ctx_.fail(path_, reason); }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    const double v = j_.get<double>();
    if (!std::isfinite(v)) fail("expected a finite number");
    return v;
  }
  double positive() const {
    const double v = number();
    if (!(v > 0.0)) fail("must be > 0");
    return v;
  }
  double non_negative() const {
    const double v = number();
    if (!(v >= 0.0)) fail("must be >= 0");
    return v;
  }
  long long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  bool is_string() const { return j_.is_string(); }
  bool is_object() const { return j_.is_object(); }
  bool is_array() const { return j_.is_array(); }
  Object object() const { return Object(j_, path_, ctx_); }
  std::vector<Value> array() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Value> out;
    for (std::size_t i = 0; i < j_.size(); ++i) {
      out.emplace_back(j_[i], path_ + "/" + std::to_string(i), ctx_);
    }
    return out;
  }
  std::vector<double> numbers() const {
    std::vector<double> out;
    for (const Value& v : array()) out.push_back(v.number());
    return out;
  }

 private:
  const json& j_;
  std::string path_;
  const Context& ctx_;
};

Object::Object(const json& j, std::string path, const Context& ctx)
    : j_(j), path_(std::move(path)), ctx_(ctx) {
  if (!j_.is_object()) ctx_.fail(path_, "expected an object");
}

Value Object::get(const std::string& key) {
  if (!j_.contains(key)) ctx_.fail(path_, "missing required field \"" + key + "\"");
  used_.insert(key);
  return Value(j_.at(key), path_ + "/" + pointer_escape(key), ctx_);
}

std::optional<Value> Object::find(const std::string& key) {
  if (!j_.contains(key)) return std::nullopt;
  used_.insert(key);
  return Value(j_.at(key), path_ + "/" + pointer_escape(key), ctx_);
}

void Object::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it) {
    if (!used_.count(it.key())) {
      ctx_.fail(path_ + "/" + pointer_escape(it.key()), "unknown field");
    }
  }
}

constexpr double kDeg = constants::pi / 180.0;

// Either an explicit array or {"start", "stop", "count", "spacing"}.
std::vector<double> parse_axis(const Value& v) {
  if (v.is_array()) {
    std::vector<double> out = v.numbers();
    if (out.empty()) v.fail("axis must not be empty");
    return out;
  }
  Object o = v.object();
  const double start = o.get("start").number();
  const double stop = o.get("stop").number();
  const Value count_v = o.get("count");
  const long long count = count_v.integer();
  if (count < 1 || count > 10'000'000) count_v.fail("count must be in [1, 1e7]");
  std::string spacing = "linear";
  if (auto s = o.find("spacing")) {
    spacing = s->string();
    if (spacing != "linear" && spacing != "log") s->fail("spacing must be \"linear\" or \"log\"");
  }
  o.finish();
  if (count == 1) {
    if (start != stop) v.fail("a single-sample axis needs start == stop");
    return {start};
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double n1 = static_cast<double>(count - 1);
  if (spacing == "linear") {
    for (long long i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = start + (stop - start) * (static_cast<double>(i) / n1);
    }
  } else {
    if (!(start > 0.0) || !(stop > 0.0)) v.fail("log spacing needs positive start and stop");
    const double l0 = std::log(start), l1 = std::log(stop);
    for (long long i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * (static_cast<double>(i) / n1));
    }
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

std::string parse_label(const Value& v, std::set<std::string>& seen) {
  const std::string label = v.string();
  if (label.empty() || label.size() > 64) v.fail("label must have 1 to 64 characters");
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '+';
    if (!ok) v.fail("label may only contain letters, digits, '_', '-' and '+'");
  }
  if (!seen.insert(label).second) v.fail("duplicate label \"" + label + "\"");
  return label;
}

// Value given as "<key>" in rad/s or "<key>_hz" in Hz.
double parse_angular_rate(Object& o, const std::string& key, bool required) {
  auto rad = o.find(key);
  auto hz = o.find(key + "_hz");
  if (rad && hz) hz->fail("give either \"" + key + "\" or \"" + key + "_hz\", not both");
  if (rad) return rad->number();
  if (hz) return 2.0 * constants::pi * hz->number();
  if (required) o.ctx().fail(o.path(), "missing required field \"" + key + "\" (or \"" + key + "_hz\")");
  return 0.0;
}

template <class F>
auto checked(const Context& ctx, const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    ctx.fail(path, e.what());
  }
}

numkernel::QuadratureSpec parse_quadrature(Object& root) {
  numkernel::QuadratureSpec q;
  auto v = root.find("quadrature");
  if (!v) return q;
  Object o = v->object();
  if (auto s = o.find("scheme")) {
    const std::string name = s->string();
    if (name == "adaptive") q.scheme = numkernel::QuadratureScheme::adaptive;
    else if (name == "gauss-legendre") q.scheme = numkernel::QuadratureScheme::fixed_gauss_legendre;
    else s->fail("scheme must be \"adaptive\" or \"gauss-legendre\"");
  }
  if (auto x = o.find("rel_tol")) q.rel_tol = x->number();
  if (auto x = o.find("abs_tol")) q.abs_tol = x->number();
  if (auto x = o.find("max_depth")) q.max_depth = static_cast<int>(x->integer());
  if (auto x = o.find("fixed_order")) q.fixed_order = static_cast<int>(x->integer());
  o.finish();
  checked(root.ctx(), v->path(), [&] { q.validate(); });
  return q;
}

PupilEntry parse_pupil(const Value& v, double wavelength, std::set<std::string>& labels) {
  Object o = v.object();
  PupilEntry e;
  e.label = parse_label(o.get("label"), labels);
  vector_focus::PupilSpec& p = e.pupil;
  p.wavelength = wavelength;
  p.alpha = o.get("alpha_deg").positive() * kDeg;
  if (auto x = o.find("alpha_inner_deg")) p.alpha_inner = x->non_negative() * kDeg;
  if (auto x = o.find("amplitude")) p.amplitude = x->positive();

  const Value pol = o.get("polarization");
  e.polarization_name = pol.string();
  if (e.polarization_name == "radial") p.polarization = vector_focus::Polarization::radial();
  else if (e.polarization_name == "azimuthal") p.polarization = vector_focus::Polarization::azimuthal();
  else if (e.polarization_name == "linear_x") p.polarization = vector_focus::Polarization::linear_x();
  else pol.fail("polarization must be \"radial\", \"azimuthal\" or \"linear_x\"");

  if (auto ap = o.find("apodization")) {
    if (ap->is_string()) {
      e.apodization_name = ap->string();
      if (e.apodization_name == "aplanatic") p.apodization = vector_focus::Apodization::aplanatic();
      else if (e.apodization_name == "uniform") p.apodization = vector_focus::Apodization::uniform();
      else ap->fail("apodization must be \"aplanatic\", \"uniform\" or a table");
    } else {
      Object t = ap->object();
      std::vector<double> theta = t.get("theta_deg").numbers();
      const std::vector<double> value = t.get("value").numbers();
      t.finish();
      for (double& x : theta) x *= kDeg;
      p.apodization = checked(o.ctx(), ap->path(), [&] {
        return vector_focus::Apodization::tabulated(numkernel::LinearTable(theta, value));
      });
      if (theta.front() > p.alpha_inner || theta.back() < p.alpha) {
        ap->fail("table must cover the open pupil [alpha_inner_deg, alpha_deg]");
      }
      e.apodization_name = "table";
    }
  } else {
    e.apodization_name = "aplanatic";
  }
  o.finish();
  checked(o.ctx(), v.path(), [&] { p.validate(); });
  return e;
}

FieldScanConfig parse_field_scan(Object& root) {
  FieldScanConfig c;
  const double wavelength = root.get("wavelength").positive();
  std::set<std::string> labels;
  const Value pupils = root.get("pupils");
  for (const Value& v : pupils.array()) c.pupils.push_back(parse_pupil(v, wavelength, labels));
  if (c.pupils.empty()) pupils.fail("at least one pupil is required");

  const Value gv = root.get("grid");
  Object g = gv.object();
  c.grid.r_t = parse_axis(g.get("r_t"));
  c.grid.phi_c = {0.0};
  if (auto x = g.find("phi_c_deg")) {
    c.grid.phi_c = parse_axis(*x);
    for (double& a : c.grid.phi_c) a *= kDeg;
  }
  c.grid.z = {0.0};
  if (auto x = g.find("z")) c.grid.z = parse_axis(*x);
  g.finish();
  checked(root.ctx(), gv.path(), [&] { c.grid.validate(); });

  if (auto q = root.find("quantities")) {
    std::set<FieldQuantity> seen;
    for (const Value& v : q->array()) {
      const std::string n = v.string();
      FieldQuantity f;
      if (n == "ex2") f = FieldQuantity::ex2;
      else if (n == "ey2") f = FieldQuantity::ey2;
      else if (n == "ez2") f = FieldQuantity::ez2;
      else if (n == "intensity") f = FieldQuantity::intensity;
      else v.fail("quantity must be one of ex2, ey2, ez2, intensity");
      if (!seen.insert(f).second) v.fail("duplicate quantity");
      c.quantities.push_back(f);
    }
    if (c.quantities.empty()) q->fail("at least one quantity is required");
  } else {
    c.quantities = {FieldQuantity::ex2, FieldQuantity::ey2, FieldQuantity::ez2,
                    FieldQuantity::intensity};
  }
  return c;
}

atom_optics::AtomSpecies parse_species(const Value& v) {
  if (v.is_string()) {
    const std::string name = v.string();
    try {
      return atom_optics::species_preset(name);
    } catch (const std::invalid_argument&) {
      v.fail("unknown species \"" + name + "\" (known: cr52, na23)");
    }
  }
  Object o = v.object();
  atom_optics::AtomSpecies s;
  s.name = o.get("name").string();
  s.mass = o.get("mass").positive();
  s.transition_wavelength = o.get("transition_wavelength").positive();
  s.linewidth = parse_angular_rate(o, "linewidth", true);
  s.saturation_intensity = o.get("saturation_intensity").positive();
  o.finish();
  checked(o.ctx(), v.path(), [&] { s.validate(); });
  return s;
}

atom_optics::PotentialProfile parse_profile(const Value& v, std::string& name) {
  atom_optics::PotentialProfile p;
  if (v.is_string()) {
    name = v.string();
    if (name == "red_j0sq") p.kind = atom_optics::PhaseKind::red_j0sq;
    else if (name == "blue_j1sq") p.kind = atom_optics::PhaseKind::blue_j1sq;
    else if (name == "ideal") p.kind = atom_optics::PhaseKind::ideal;
    else if (name == "free_flight") p.kind = atom_optics::PhaseKind::free_flight;
    else v.fail("profile must be red_j0sq, blue_j1sq, ideal, free_flight or a custom table");
    return p;
  }
  Object o = v.object();
  const Value kind = o.get("kind");
  if (kind.string() != "custom") kind.fail("table profiles need \"kind\": \"custom\"");
  p.kind = atom_optics::PhaseKind::custom;
  p.table.rho = o.get("rho").numbers();
  p.table.intensity = o.get("intensity").numbers();
  o.finish();
  name = "custom";
  return p;
}

atom_optics::LensPulse parse_pulse(Object& o) {
  atom_optics::LensPulse p;
  p.duration = o.get("duration").positive();
  p.detuning = parse_angular_rate(o, "detuning", true);
  if (auto x = o.find("c1")) p.c1 = x->positive();
  if (auto x = o.find("field_area")) p.field_area = x->number();
  return p;
}

AtomFocusConfig parse_atom_focus(Object& root) {
  AtomFocusConfig c;
  atom_optics::LensSetup& s = c.setup;
  s.species = parse_species(root.get("species"));
  s.beam_velocity = root.get("beam_velocity").positive();
  s.aperture_radius = root.get("aperture_radius").positive();
  if (auto x = root.find("profile")) s.profile = parse_profile(*x, c.profile_name);
  else c.profile_name = "red_j0sq";

  std::optional<double> default_f;
  if (auto x = root.find("focal_length")) default_f = x->positive();

  const Value rv = root.get("r");
  c.r = parse_axis(rv);
  for (std::size_t i = 0; i < c.r.size(); ++i) {
    if (!(c.r[i] >= 0.0)) rv.fail("radii must be >= 0");
    if (i > 0 && !(c.r[i] > c.r[i - 1])) rv.fail("radii must be strictly increasing");
  }
  if (auto x = root.find("z")) c.z = x->number();
  if (auto x = root.find("report")) {
    const std::string r = x->string();
    if (r == "density") c.report = AtomReport::density;
    else if (r == "phase") c.report = AtomReport::phase;
    else x->fail("report must be \"density\" or \"phase\"");
  }

  std::set<std::string> labels;
  const Value pulses = root.get("pulses");
  for (const Value& pv : pulses.array()) {
    Object o = pv.object();
    PulseEntry e;
    e.label = parse_label(o.get("label"), labels);
    e.pulse = parse_pulse(o);
    std::optional<double> f = default_f;
    if (auto x = o.find("focal_length")) f = x->positive();
    o.finish();
    const atom_optics::LensSetup setup = c.setup_for(e);
    checked(root.ctx(), pv.path(), [&] {
      setup.validate();
      e.field_area = atom_optics::effective_field_area(e.pulse, s.species);
      if (f) {
        e.focal_length = *f;
      } else if (s.profile.kind == atom_optics::PhaseKind::red_j0sq ||
                 s.profile.kind == atom_optics::PhaseKind::blue_j1sq) {
        e.focal_length = setup.paraxial_focal_length();
      } else {
        throw std::invalid_argument("focal_length is required for profile " + c.profile_name);
      }
      const atom_optics::PhaseModel model = setup.phase_model(e.focal_length);
      if (s.aperture_radius > model.max_radius()) {
        throw std::invalid_argument("custom profile table does not cover the aperture");
      }
    });
    c.pulses.push_back(std::move(e));
  }
  if (c.pulses.empty()) pulses.fail("at least one pulse is required");
  return c;
}

FocalSweepConfig parse_focal_sweep(Object& root) {
  FocalSweepConfig c;
  const Value sp = root.get("species");
  for (const Value& v : sp.array()) c.species.push_back(parse_species(v));
  if (c.species.empty()) sp.fail("at least one species is required");
  std::set<std::string> names;
  for (const auto& s : c.species) {
    if (!names.insert(s.name).second) sp.fail("duplicate species \"" + s.name + "\"");
  }
  c.beam_velocity = root.get("beam_velocity").positive();
  const Value av = root.get("field_area");
  c.field_areas = parse_axis(av);
  for (double a : c.field_areas) {
    if (!(a > 0.0)) av.fail("|A| values must be > 0");
  }
  if (auto m = root.find("lens_mode")) {
    const std::string n = m->string();
    if (n == "red") c.lens_mode = atom_optics::LensMode::red;
    else if (n == "blue") c.lens_mode = atom_optics::LensMode::blue;
    else m->fail("lens_mode must be \"red\" or \"blue\"");
  }
  return c;
}

ScenarioConfig parse_text(std::string_view text, const std::string& source, int depth);

ScenarioConfig parse_preset_by_name(std::string_view name, int depth) {
  const auto text = preset_text(name);
  if (!text) throw ConfigError("preset", 0, 0, "", "unknown preset \"" + std::string(name) + "\"");
  return parse_text(*text, "preset:" + std::string(name), depth);
}

ScenarioConfig parse_document(const json& doc, std::string_view text, const std::string& source,
                              int depth) {
  Context ctx(source, PositionScanner(text, source).run());
  Object root(doc, "", ctx);

  const Value version = root.get("version");
  if (version.integer() != kConfigVersion) {
    version.fail("unsupported config version (expected " + std::to_string(kConfigVersion) + ")");
  }
  const Value mode = root.get("mode");
  const std::string mode_name = mode.string();
  if (mode_name == "preset") {
    const Value name = root.get("preset");
    root.finish();
    if (depth > 0) name.fail("presets cannot refer to other presets");
    try {
      return parse_preset_by_name(name.string(), depth + 1);
    } catch (const ConfigError& e) {
      if (e.source() == "preset") name.fail(e.reason());
      throw;
    }
  }

  ScenarioConfig c;
  c.source = source;
  c.version = kConfigVersion;
  if (auto x = root.find("name")) c.name = x->string();
  if (auto x = root.find("description")) c.description = x->string();
  c.quadrature = parse_quadrature(root);
  if (mode_name == "field-scan") {
    c.mode = Mode::field_scan;
    c.body = parse_field_scan(root);
  } else if (mode_name == "atom-focus") {
    c.mode = Mode::atom_focus;
    c.body = parse_atom_focus(root);
  } else if (mode_name == "focal-sweep") {
    c.mode = Mode::focal_sweep;
    c.body = parse_focal_sweep(root);
  } else {
    mode.fail("mode must be field-scan, atom-focus, focal-sweep or preset");
  }
  root.finish();
  c.canonical = doc.dump();
  c.hash = fnv1a64(c.canonical);
  return c;
}

ScenarioConfig parse_text(std::string_view text, const std::string& src, int depth) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Convert the byte offset to line and column.
    const std::size_t off = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < off; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string reason = e.what();
    if (auto pos = reason.find("syntax error"); pos != std::string::npos) reason = reason.substr(pos);
    throw ConfigError(src, line, static_cast<int>(off - line_start) + 1, "", reason);
  }
  return parse_document(doc, text, src, depth);
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, std::string_view source) {
  return parse_text(text, std::string(source), 0);
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), 0, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < detail::kPresetFileCount; ++i) out.push_back(detail::kPresetFiles[i].first);
  return out;
}

std::optional<std::string_view> preset_text(std::string_view name) {
  for (std::size_t i = 0; i < detail::kPresetFileCount; ++i) {
    if (detail::kPresetFiles[i].first == name) return detail::kPresetFiles[i].second;
  }
  return std::nullopt;
}

ScenarioConfig load_preset(std::string_view name) { return parse_preset_by_name(name, 1); }

}  // namespace atomlens::cli
