// Copyright 2026 The Abugida Toolkit Authors
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

#include "abugida/script_spec.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace abugida {

// Defined in the generated bundled_specs.cpp.
namespace detail {
const std::vector<std::pair<std::string, std::string_view>>& embedded_spec_documents();
}

namespace {

using nlohmann::json;

constexpr std::size_t kMaxDenseSpan = 4096;

[[noreturn]] void schema_error(const std::string& msg) {
  throw SpecError(SpecError::Kind::SchemaError, "spec schema: " + msg);
}

// A codepoint token is "U+XXXX", a decimal integer, or a one-codepoint
// UTF-8 string.
char32_t parse_token(const json& j, const std::string& where) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || v > 0x10FFFF) schema_error(where + ": codepoint out of range");
    return static_cast<char32_t>(v);
  }
  if (!j.is_string()) schema_error(where + ": expected codepoint token");
  const auto& s = j.get_ref<const std::string&>();
  if (auto cp = parse_hex_codepoint(s)) return *cp;
  Word w = utf8_decode(s);
  if (w.size() != 1) schema_error(where + ": bad codepoint token '" + s + "'");
  return w[0];
}

// Like parse_token but also accepts "U+0995..U+09A8" ranges.
void parse_token_or_range(const json& j, const std::string& where, std::vector<char32_t>& out) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    auto dots = s.find("..");
    if (dots != std::string::npos) {
      auto lo = parse_hex_codepoint(std::string_view(s).substr(0, dots));
      auto hi = parse_hex_codepoint(std::string_view(s).substr(dots + 2));
      if (!lo || !hi || *lo > *hi) schema_error(where + ": bad range '" + s + "'");
      for (char32_t cp = *lo; cp <= *hi; ++cp) out.push_back(cp);
      return;
    }
  }
  out.push_back(parse_token(j, where));
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing key '") + key + "'");
  return *it;
}

const json& optional_key(const json& doc, const char* key, const json& fallback) {
  auto it = doc.find(key);
  return it == doc.end() ? fallback : *it;
}

std::vector<std::array<char32_t, 3>> parse_triples(const json& j, const char* key) {
  if (!j.is_array()) schema_error(std::string(key) + " must be a list");
  std::vector<std::array<char32_t, 3>> out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) {
      schema_error(std::string(key) + " entries must be [first, second, composed]");
    }
    out.push_back({parse_token(entry[0], key), parse_token(entry[1], key),
                   parse_token(entry[2], key)});
  }
  return out;
}

std::map<char32_t, char32_t> parse_cp_map(const json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string(key) + " must be an object");
  std::map<char32_t, char32_t> out;
  for (const auto& [k, v] : j.items()) {
    out[parse_token(json(k), key)] = parse_token(v, key);
  }
  return out;
}

}  // namespace

std::string_view class_key(CodepointClass cls) {
  switch (cls) {
    case CodepointClass::Vowel: return "vowel";
    case CodepointClass::Consonant: return "consonant";
    case CodepointClass::VowelDiacritic: return "vowel_diacritic";
    case CodepointClass::ConsonantDiacritic: return "consonant_diacritic";
    case CodepointClass::Connector: return "connector";
    case CodepointClass::Nukta: return "nukta";
    case CodepointClass::Digit: return "digit";
    case CodepointClass::Symbol: return "symbol";
    case CodepointClass::Legacy: return "legacy";
    case CodepointClass::Foreign: return "foreign";
  }
  return "foreign";
}

std::optional<CodepointClass> class_from_key(std::string_view key) {
  for (auto cls : kAllClasses) {
    if (class_key(cls) == key) return cls;
  }
  return std::nullopt;
}

ScriptSpec ScriptSpec::from_data(ScriptSpecData data) {
  ScriptSpec spec;
  std::map<char32_t, CodepointClass> all;
  for (auto& [cls, cps] : data.classes) {
    if (cls == CodepointClass::Foreign) continue;
    for (char32_t cp : cps) {
      auto [it, inserted] = all.emplace(cp, cls);
      if (!inserted && it->second != cls) {
        throw SpecError(SpecError::Kind::ClassConflict,
                        format_codepoint(cp) + " listed as both " +
                            std::string(class_key(it->second)) + " and " +
                            std::string(class_key(cls)));
      }
    }
  }
  for (auto& [cp, cls] : all) spec.members_[cls].push_back(cp);

  // Dense table over the densest window: the script block plus whatever
  // shared codepoints (dandas) sit close to it.
  if (!all.empty()) {
    char32_t lo = all.begin()->first;
    char32_t hi = all.rbegin()->first;
    if (hi - lo < kMaxDenseSpan) {
      spec.dense_base_ = lo;
      spec.dense_.assign(hi - lo + 1, CodepointClass::Foreign);
      for (auto& [cp, cls] : all) spec.dense_[cp - lo] = cls;
    } else {
      for (auto& [cp, cls] : all) spec.sparse_.emplace(cp, cls);
    }
  }

  for (const auto& t : data.nukta_compositions) {
    spec.nukta_compose_.emplace(t[0], t[2]);
    spec.nukta_decompose_.emplace(t[2], std::make_pair(t[0], t[1]));
  }
  for (const auto& t : data.diacritic_compositions) {
    spec.diacritic_compose_.emplace(pair_key(t[0], t[1]), t[2]);
    spec.diacritic_decompose_.emplace(t[2], std::make_pair(t[0], t[1]));
  }
  for (const auto& entry : data.conjunct_whitelist) {
    spec.whitelist_.insert(entry);
    spec.max_conjunct_ = std::max(spec.max_conjunct_, entry.size());
  }
  std::sort(data.rule_referenced.begin(), data.rule_referenced.end());
  spec.data_ = std::move(data);
  return spec;
}

const std::vector<char32_t>& ScriptSpec::members(CodepointClass cls) const {
  static const std::vector<char32_t> kEmpty;
  auto it = members_.find(cls);
  return it == members_.end() ? kEmpty : it->second;
}

std::optional<char32_t> ScriptSpec::compose_nukta(char32_t base) const {
  auto it = nukta_compose_.find(base);
  if (it == nukta_compose_.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> ScriptSpec::compose_diacritics(char32_t first, char32_t second) const {
  auto it = diacritic_compose_.find(pair_key(first, second));
  if (it == diacritic_compose_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<char32_t, char32_t>> ScriptSpec::decompose_nukta(char32_t composed) const {
  auto it = nukta_decompose_.find(composed);
  if (it == nukta_decompose_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<char32_t, char32_t>> ScriptSpec::decompose_diacritic(
    char32_t composed) const {
  auto it = diacritic_decompose_.find(composed);
  if (it == diacritic_decompose_.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> ScriptSpec::legacy_replacement(char32_t cp) const {
  auto it = data_.legacy_map.find(cp);
  if (it == data_.legacy_map.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> ScriptSpec::assamese_replacement(char32_t cp) const {
  auto it = data_.assamese_map.find(cp);
  if (it == data_.assamese_map.end()) return std::nullopt;
  return it->second;
}

bool ScriptSpec::is_rule_referenced(char32_t cp) const {
  return std::binary_search(data_.rule_referenced.begin(), data_.rule_referenced.end(), cp);
}

std::string_view rule_name(SpecViolation::Rule rule) {
  using R = SpecViolation::Rule;
  switch (rule) {
    case R::ConnectorNotConnectorClass: return "ConnectorNotConnectorClass";
    case R::MultipleConnectors: return "MultipleConnectors";
    case R::NuktaNotNuktaClass: return "NuktaNotNuktaClass";
    case R::NuktaCompositionWrongSign: return "NuktaCompositionWrongSign";
    case R::NuktaCompositionBaseNotConsonant: return "NuktaCompositionBaseNotConsonant";
    case R::NuktaCompositionResultNotConsonant: return "NuktaCompositionResultNotConsonant";
    case R::DiacriticCompositionKeyNotVowelDiacritic:
      return "DiacriticCompositionKeyNotVowelDiacritic";
    case R::DiacriticCompositionValueNotVowelDiacritic:
      return "DiacriticCompositionValueNotVowelDiacritic";
    case R::LegacyKeyNotLegacy: return "LegacyKeyNotLegacy";
    case R::UnclassifiedMapEntry: return "UnclassifiedMapEntry";
    case R::WhitelistNonConsonant: return "WhitelistNonConsonant";
    case R::WhitelistLength: return "WhitelistLength";
    case R::KhandaTaNotConsonant: return "KhandaTaNotConsonant";
  }
  return "?";
}

std::vector<SpecViolation> validate_spec(const ScriptSpec& spec) {
  using R = SpecViolation::Rule;
  using C = CodepointClass;
  std::vector<SpecViolation> out;
  auto add = [&](R rule, char32_t cp, std::string detail) {
    out.push_back({rule, cp, std::move(detail)});
  };
  // Map entries must be classified, or be an explicitly rule-referenced
  // Foreign codepoint.
  auto check_known = [&](char32_t cp, const char* table) {
    if (spec.classify(cp) == C::Foreign && !spec.is_rule_referenced(cp)) {
      add(R::UnclassifiedMapEntry, cp, std::string("in ") + table);
    }
  };

  const auto& d = spec.data();
  if (spec.classify(d.connector) != C::Connector) {
    add(R::ConnectorNotConnectorClass, d.connector, "connector must have class connector");
  }
  if (spec.members(C::Connector).size() > 1) {
    for (char32_t cp : spec.members(C::Connector)) {
      if (cp != d.connector) add(R::MultipleConnectors, cp, "second connector-class codepoint");
    }
  }
  if (d.nukta && spec.classify(*d.nukta) != C::Nukta) {
    add(R::NuktaNotNuktaClass, *d.nukta, "nukta must have class nukta");
  }
  for (const auto& [base, sign, composed] : d.nukta_compositions) {
    if (!d.nukta || sign != *d.nukta) add(R::NuktaCompositionWrongSign, sign, "not the nukta");
    if (spec.classify(base) != C::Consonant) {
      add(R::NuktaCompositionBaseNotConsonant, base, "nukta base");
    }
    if (spec.classify(composed) != C::Consonant) {
      add(R::NuktaCompositionResultNotConsonant, composed, "nukta result");
    }
  }
  for (const auto& [a, b, composed] : d.diacritic_compositions) {
    for (char32_t cp : {a, b}) {
      if (spec.classify(cp) != C::VowelDiacritic) {
        add(R::DiacriticCompositionKeyNotVowelDiacritic, cp, "diacritic composition key");
      }
    }
    if (spec.classify(composed) != C::VowelDiacritic) {
      add(R::DiacriticCompositionValueNotVowelDiacritic, composed, "diacritic composition value");
    }
  }
  for (const auto& [from, to] : d.legacy_map) {
    if (spec.classify(from) != C::Legacy) add(R::LegacyKeyNotLegacy, from, "legacy_map key");
    check_known(to, "legacy_map");
  }
  for (const auto& [from, to] : d.assamese_map) {
    check_known(from, "assamese_map");
    check_known(to, "assamese_map");
  }
  for (const auto& entry : d.conjunct_whitelist) {
    if (entry.size() < 2 || entry.size() > 4) {
      add(R::WhitelistLength, entry.empty() ? 0 : entry[0],
          "conjunct of length " + std::to_string(entry.size()));
    }
    for (char32_t cp : entry) {
      if (spec.classify(cp) != C::Consonant) {
        add(R::WhitelistNonConsonant, cp, "whitelist entry " + format_codepoints(entry));
      }
    }
  }
  if (d.khanda_ta) {
    for (char32_t cp : {d.khanda_ta->base, d.khanda_ta->composed}) {
      if (spec.classify(cp) != C::Consonant) add(R::KhandaTaNotConsonant, cp, "khanda_ta");
    }
  }
  return out;
}

ScriptSpecData parse_spec_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("document must be an object");

  ScriptSpecData data;
  const auto& code = require(doc, "script_code");
  if (!code.is_string() || code.get<std::string>().empty()) {
    schema_error("script_code must be a non-empty string");
  }
  data.script_code = code.get<std::string>();
  data.name = doc.value("name", data.script_code);

  if (auto it = doc.find("block"); it != doc.end()) {
    std::vector<char32_t> range;
    parse_token_or_range(*it, "block", range);
    data.block = {range.front(), range.back()};
  }

  const auto& classes = require(doc, "classes");
  if (!classes.is_object()) schema_error("classes must be an object");
  for (const auto& [key, list] : classes.items()) {
    auto cls = class_from_key(key);
    if (!cls) schema_error("unknown class '" + key + "'");
    if (!list.is_array()) schema_error("classes." + key + " must be a list");
    auto& bucket = data.classes[*cls];
    for (const auto& tok : list) parse_token_or_range(tok, "classes." + key, bucket);
  }

  data.connector = parse_token(require(doc, "connector"), "connector");
  // The remaining keys may be omitted; absent tables are empty.
  const json nothing;
  const json no_list = json::array();
  const json no_map = json::object();
  const auto& nukta = optional_key(doc, "nukta", nothing);
  if (!nukta.is_null()) data.nukta = parse_token(nukta, "nukta");

  data.nukta_compositions =
      parse_triples(optional_key(doc, "nukta_compositions", no_list), "nukta_compositions");
  data.diacritic_compositions = parse_triples(
      optional_key(doc, "diacritic_compositions", no_list), "diacritic_compositions");
  data.legacy_map = parse_cp_map(optional_key(doc, "legacy_map", no_map), "legacy_map");
  data.assamese_map = parse_cp_map(optional_key(doc, "assamese_map", no_map), "assamese_map");

  const auto& whitelist = optional_key(doc, "conjunct_whitelist", no_list);
  if (!whitelist.is_array()) schema_error("conjunct_whitelist must be a list");
  for (const auto& entry : whitelist) {
    Word conjunct;
    if (entry.is_array()) {
      for (const auto& tok : entry) conjunct.push_back(parse_token(tok, "conjunct_whitelist"));
    } else if (entry.is_string()) {
      // Conjunct text; connectors are optional and stripped.
      for (char32_t cp : utf8_decode(entry.get<std::string>())) {
        if (cp != data.connector) conjunct.push_back(cp);
      }
    } else {
      schema_error("conjunct_whitelist entries must be strings or lists");
    }
    data.conjunct_whitelist.push_back(std::move(conjunct));
  }

  if (auto it = doc.find("rule_referenced"); it != doc.end()) {
    if (!it->is_array()) schema_error("rule_referenced must be a list");
    for (const auto& tok : *it) data.rule_referenced.push_back(parse_token(tok, "rule_referenced"));
  }
  if (auto it = doc.find("khanda_ta"); it != doc.end() && !it->is_null()) {
    KhandaTa kt;
    kt.base = parse_token(require(*it, "base"), "khanda_ta.base");
    kt.composed = parse_token(require(*it, "composed"), "khanda_ta.composed");
    data.khanda_ta = kt;
  }
  return data;
}

ScriptSpec load_script_spec(std::string_view json_text) {
  ScriptSpecData data = parse_spec_document(json_text);
  const char32_t connector = data.connector;
  const std::string code = data.script_code;
  ScriptSpec spec = ScriptSpec::from_data(std::move(data));
  if (spec.classify(connector) == CodepointClass::Foreign) {
    throw SpecError(SpecError::Kind::UnknownConnector,
                    code + ": connector " + format_codepoint(connector) + " is not classified");
  }
  auto violations = validate_spec(spec);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << code << ": " << violations.size() << " invariant violation(s):";
    for (const auto& v : violations) {
      msg << " " << rule_name(v.rule) << "(" << format_codepoint(v.codepoint) << ")";
    }
    throw SpecError(SpecError::Kind::InvariantViolation, msg.str());
  }
  return spec;
}

ScriptSpec load_script_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(SpecError::Kind::SchemaError, "cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_script_spec(buf.str());
}

const std::vector<std::string>& bundled_script_codes() {
  static const std::vector<std::string> codes = [] {
    std::vector<std::string> out;
    for (const auto& [code, doc] : detail::embedded_spec_documents()) out.push_back(code);
    return out;
  }();
  return codes;
}

std::string_view bundled_spec_document(std::string_view script_code) {
  for (const auto& [code, doc] : detail::embedded_spec_documents()) {
    if (code == script_code) return doc;
  }
  throw SpecError(SpecError::Kind::UnknownScript,
                  "unknown script '" + std::string(script_code) + "'");
}

const ScriptSpec& bundled_spec(std::string_view script_code) {
  static std::mutex mu;
  static std::map<std::string, ScriptSpec, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(script_code); it != cache.end()) return it->second;
  std::string_view doc = bundled_spec_document(script_code);
  auto [it, inserted] = cache.emplace(std::string(script_code), load_script_spec(doc));
  return it->second;
}

}  // namespace abugida
