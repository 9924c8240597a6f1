#pragma once

// Conversations, their decomposition into translation units, and the inverse
// reassembly. JSONL is the on-disk form for everything here.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "sftc/errors.hpp"

namespace sftc {

using ordered_json = nlohmann::ordered_json;

enum class Role { kSystem, kUser, kAssistant, kTool };

inline std::string_view to_string(Role r) {
  switch (r) {
    case Role::kSystem: return "system";
    case Role::kUser: return "user";
    case Role::kAssistant: return "assistant";
    case Role::kTool: return "tool";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view s) {
  if (s == "system") return Role::kSystem;
  if (s == "user") return Role::kUser;
  if (s == "assistant") return Role::kAssistant;
  if (s == "tool") return Role::kTool;
  return std::nullopt;
}

struct Message {
  Role role = Role::kUser;
  std::string content;
  std::size_t index = 0;

  bool operator==(const Message&) const = default;
};

struct Conversation {
  std::string id;
  std::string split;
  std::vector<Message> messages;
  // Unrecognised top-level fields of the input line, carried through untouched.
  ordered_json extra = ordered_json::object();

  bool operator==(const Conversation&) const = default;
};

enum class PartKind { kThink, kVisible };

inline std::string_view to_string(PartKind k) { return k == PartKind::kThink ? "think" : "visible"; }

inline std::optional<PartKind> parse_part_kind(std::string_view s) {
  if (s == "think") return PartKind::kThink;
  if (s == "visible") return PartKind::kVisible;
  return std::nullopt;
}

struct Part {
  PartKind kind = PartKind::kVisible;
  std::string text;

  bool operator==(const Part&) const = default;
};

struct UnitKey {
  std::string conversation_id;
  std::size_t message_index = 0;
  std::size_t part_index = 0;
  std::size_t chunk_index = 0;

  auto operator<=>(const UnitKey&) const = default;
  bool operator==(const UnitKey&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << conversation_id << ":" << message_index << ":" << part_index << ":" << chunk_index;
    return os.str();
  }
};

struct TranslationUnit {
  std::string conversation_id;
  std::string split;
  std::size_t message_index = 0;
  PartKind part_type = PartKind::kVisible;
  std::size_t part_index = 0;
  std::size_t chunk_index = 0;
  std::size_t chunk_count = 1;
  Role role = Role::kUser;
  std::string source_text;

  UnitKey key() const { return {conversation_id, message_index, part_index, chunk_index}; }
  bool operator==(const TranslationUnit&) const = default;
};

struct TranslatedUnit {
  TranslationUnit unit;
  std::string translated_text;
  std::string translator_id;

  bool operator==(const TranslatedUnit&) const = default;
};

struct Candidate {
  std::string conversation_id;
  std::string translator_id;
  Conversation conversation;
};

// ---------------------------------------------------------------------------
// JSONL ingestion

struct LineDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParseOptions {
  // Strict mode throws on the first batch of problems; lenient mode skips
  // offending lines and reports them in ParseResult::diagnostics.
  bool strict = true;
};

struct ParseResult {
  std::vector<Conversation> conversations;
  std::vector<LineDiagnostic> diagnostics;
};

namespace detail {

inline std::string format_diagnostics(const std::vector<LineDiagnostic>& diags) {
  std::ostringstream os;
  for (std::size_t i = 0; i < diags.size(); ++i) {
    if (i) os << "\n";
    os << "line " << diags[i].line << ": " << diags[i].message;
  }
  return os.str();
}

inline const ordered_json& require_field(const ordered_json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ValidationError(std::string("missing required field '") + name + "'");
  return *it;
}

inline std::string require_string(const ordered_json& obj, const char* name) {
  const auto& v = require_field(obj, name);
  if (!v.is_string()) throw ValidationError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline Conversation conversation_from_json(const ordered_json& obj) {
  if (!obj.is_object()) throw ValidationError("line is not a JSON object");
  Conversation c;
  c.id = detail::require_string(obj, "id");
  c.split = detail::require_string(obj, "split");
  const auto& msgs = detail::require_field(obj, "messages");
  if (!msgs.is_array()) throw ValidationError("field 'messages' must be an array");
  if (msgs.empty()) throw ValidationError("conversation '" + c.id + "' has an empty messages list");
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    const auto& m = msgs[i];
    if (!m.is_object()) throw ValidationError("message " + std::to_string(i) + " is not an object");
    const auto role_name = detail::require_string(m, "role");
    const auto role = parse_role(role_name);
    if (!role) throw ValidationError("message " + std::to_string(i) + " has unknown role '" + role_name + "'");
    c.messages.push_back({*role, detail::require_string(m, "content"), i});
  }
  for (const auto& [key, value] : obj.items()) {
    if (key != "id" && key != "split" && key != "messages") c.extra[key] = value;
  }
  return c;
}

inline ordered_json to_json(const Conversation& c) {
  ordered_json obj = ordered_json::object();
  obj["id"] = c.id;
  obj["split"] = c.split;
  auto msgs = ordered_json::array();
  for (const auto& m : c.messages) {
    ordered_json jm = ordered_json::object();
    jm["role"] = std::string(to_string(m.role));
    jm["content"] = m.content;
    msgs.push_back(std::move(jm));
  }
  obj["messages"] = std::move(msgs);
  for (const auto& [key, value] : c.extra.items()) obj[key] = value;
  return obj;
}

inline std::string to_jsonl_line(const Conversation& c) { return to_json(c).dump(); }

inline ParseResult parse_corpus(std::istream& in, const ParseOptions& opts = {}) {
  ParseResult result;
  std::map<std::string, std::size_t> first_line_of;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto conv = conversation_from_json(ordered_json::parse(line));
      auto [it, inserted] = first_line_of.emplace(conv.id, lineno);
      if (!inserted) {
        result.diagnostics.push_back({lineno, "duplicate id '" + conv.id + "' (first seen on line " +
                                                  std::to_string(it->second) + ", repeated on line " +
                                                  std::to_string(lineno) + ")"});
        continue;
      }
      result.conversations.push_back(std::move(conv));
    } catch (const nlohmann::json::exception& e) {
      result.diagnostics.push_back({lineno, std::string("malformed JSON: ") + e.what()});
    } catch (const ValidationError& e) {
      result.diagnostics.push_back({lineno, e.what()});
    }
  }
  if (opts.strict && !result.diagnostics.empty()) {
    throw CorpusError(detail::format_diagnostics(result.diagnostics));
  }
  return result;
}

inline ParseResult parse_corpus(std::string_view text, const ParseOptions& opts = {}) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in, opts);
}

inline void write_corpus(std::ostream& out, std::span<const Conversation> convs) {
  for (const auto& c : convs) out << to_jsonl_line(c) << '\n';
}

// ---------------------------------------------------------------------------
// <think> handling

inline constexpr std::string_view kThinkOpen = "<think>";
inline constexpr std::string_view kThinkClose = "</think>";

// Splits message content into think and visible parts. Empty content is a
// single empty visible part so every message owns at least one unit.
inline std::vector<Part> split_parts(std::string_view content, std::string_view context = {}) {
  auto fail = [&](const std::string& what) {
    std::string msg = "unbalanced <think> markers";
    if (!context.empty()) msg += " in " + std::string(context);
    throw ValidationError(msg + ": " + what);
  };
  std::vector<Part> parts;
  if (content.empty()) {
    parts.push_back({PartKind::kVisible, ""});
    return parts;
  }
  std::size_t pos = 0;
  while (pos < content.size()) {
    const auto open = content.find(kThinkOpen, pos);
    const auto stray_close = content.find(kThinkClose, pos);
    if (stray_close != std::string_view::npos && (open == std::string_view::npos || stray_close < open)) {
      fail("closing marker at byte " + std::to_string(stray_close) + " without an opening marker");
    }
    if (open == std::string_view::npos) {
      parts.push_back({PartKind::kVisible, std::string(content.substr(pos))});
      break;
    }
    if (open > pos) parts.push_back({PartKind::kVisible, std::string(content.substr(pos, open - pos))});
    const auto body = open + kThinkOpen.size();
    const auto close = content.find(kThinkClose, body);
    if (close == std::string_view::npos) fail("opening marker at byte " + std::to_string(open) + " is never closed");
    const auto nested = content.find(kThinkOpen, body);
    if (nested != std::string_view::npos && nested < close) {
      fail("nested opening marker at byte " + std::to_string(nested));
    }
    parts.push_back({PartKind::kThink, std::string(content.substr(body, close - body))});
    pos = close + kThinkClose.size();
  }
  return parts;
}

inline std::string join_parts(std::span<const Part> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.kind == PartKind::kThink) {
      out += kThinkOpen;
      out += p.text;
      out += kThinkClose;
    } else {
      out += p.text;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

// Chunk texts indexed [message][part][chunk].
using ChunkPlan = std::vector<std::vector<std::vector<std::string>>>;

// One chunk per part; the plan used when no token budget applies.
inline ChunkPlan trivial_plan(const Conversation& c) {
  ChunkPlan plan;
  for (const auto& m : c.messages) {
    auto& mp = plan.emplace_back();
    for (auto& p : split_parts(m.content)) mp.push_back({std::move(p.text)});
  }
  return plan;
}

inline std::vector<TranslationUnit> decompose(const Conversation& c, const ChunkPlan& plan) {
  if (plan.size() != c.messages.size()) {
    throw ConsistencyError("chunk plan for '" + c.id + "' covers " + std::to_string(plan.size()) + " of " +
                           std::to_string(c.messages.size()) + " messages");
  }
  std::vector<TranslationUnit> units;
  for (std::size_t mi = 0; mi < c.messages.size(); ++mi) {
    const auto& msg = c.messages[mi];
    const auto parts = split_parts(msg.content, "conversation '" + c.id + "' message " + std::to_string(mi));
    if (plan[mi].size() != parts.size()) {
      throw ConsistencyError("chunk plan for '" + c.id + "' message " + std::to_string(mi) + " covers " +
                             std::to_string(plan[mi].size()) + " of " + std::to_string(parts.size()) + " parts");
    }
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
      const auto& chunks = plan[mi][pi];
      std::string joined;
      for (const auto& ch : chunks) joined += ch;
      if (chunks.empty() || joined != parts[pi].text) {
        throw ConsistencyError("chunk plan for '" + c.id + "' message " + std::to_string(mi) + " part " +
                               std::to_string(pi) + " does not reproduce the part text");
      }
      for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
        units.push_back({c.id, c.split, mi, parts[pi].kind, pi, ci, chunks.size(), msg.role, chunks[ci]});
      }
    }
  }
  return units;
}

inline std::vector<TranslatedUnit> identity_translate(std::span<const TranslationUnit> units,
                                                      std::string_view translator_id = "identity") {
  std::vector<TranslatedUnit> out;
  out.reserve(units.size());
  for (const auto& u : units) out.push_back({u, u.source_text, std::string(translator_id)});
  return out;
}

// Reassembles one conversation. Input order does not matter.
inline Conversation reconstruct(std::span<const TranslatedUnit> units) {
  if (units.empty()) throw IncompleteError("no units to reconstruct");
  const auto& id = units.front().unit.conversation_id;
  std::vector<const TranslatedUnit*> sorted;
  sorted.reserve(units.size());
  for (const auto& t : units) {
    if (t.unit.conversation_id != id) {
      throw ConsistencyError("units from conversations '" + id + "' and '" + t.unit.conversation_id + "' mixed");
    }
    sorted.push_back(&t);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const TranslatedUnit* a, const TranslatedUnit* b) { return a->unit.key() < b->unit.key(); });

  struct PartSlot {
    PartKind kind;
    std::size_t chunk_count;
    std::vector<const TranslatedUnit*> chunks;
  };
  std::map<std::size_t, std::pair<Role, std::map<std::size_t, PartSlot>>> messages;
  for (const auto* t : sorted) {
    const auto& u = t->unit;
    if (u.chunk_count == 0 || u.chunk_index >= u.chunk_count) {
      throw ConsistencyError("unit " + u.key().str() + " has chunk_index " + std::to_string(u.chunk_index) +
                             " outside chunk_count " + std::to_string(u.chunk_count));
    }
    auto [mit, fresh_msg] = messages.try_emplace(u.message_index, u.role, std::map<std::size_t, PartSlot>{});
    if (!fresh_msg && mit->second.first != u.role) {
      throw ConsistencyError("conflicting roles for message " + std::to_string(u.message_index) + " of '" + id + "'");
    }
    auto [pit, fresh_part] = mit->second.second.try_emplace(u.part_index, PartSlot{u.part_type, u.chunk_count, {}});
    auto& slot = pit->second;
    if (!fresh_part && slot.chunk_count != u.chunk_count) {
      throw ConsistencyError("conflicting chunk_count for (" + std::to_string(u.message_index) + ", " +
                             std::to_string(u.part_index) + ") of '" + id + "': " + std::to_string(slot.chunk_count) +
                             " vs " + std::to_string(u.chunk_count));
    }
    if (!fresh_part && slot.kind != u.part_type) {
      throw ConsistencyError("conflicting part_type for (" + std::to_string(u.message_index) + ", " +
                             std::to_string(u.part_index) + ") of '" + id + "'");
    }
    if (!slot.chunks.empty() && slot.chunks.back()->unit.chunk_index == u.chunk_index) {
      throw ConsistencyError("duplicate unit " + u.key().str());
    }
    slot.chunks.push_back(t);
  }

  std::vector<std::string> missing;
  auto tuple_str = [](std::size_t m, std::size_t p, std::size_t c) {
    return "(" + std::to_string(m) + ", " + std::to_string(p) + ", " + std::to_string(c) + ")";
  };
  const std::size_t message_count = messages.rbegin()->first + 1;
  for (std::size_t mi = 0; mi < message_count; ++mi) {
    auto mit = messages.find(mi);
    if (mit == messages.end()) {
      missing.push_back(tuple_str(mi, 0, 0));
      continue;
    }
    const auto& parts = mit->second.second;
    const std::size_t part_count = parts.rbegin()->first + 1;
    for (std::size_t pi = 0; pi < part_count; ++pi) {
      auto pit = parts.find(pi);
      if (pit == parts.end()) {
        missing.push_back(tuple_str(mi, pi, 0));
        continue;
      }
      std::set<std::size_t> present;
      for (const auto* t : pit->second.chunks) present.insert(t->unit.chunk_index);
      for (std::size_t ci = 0; ci < pit->second.chunk_count; ++ci) {
        if (!present.count(ci)) missing.push_back(tuple_str(mi, pi, ci));
      }
    }
  }
  if (!missing.empty()) {
    std::string msg = "incomplete unit set for '" + id + "'; missing (message_index, part_index, chunk_index):";
    for (const auto& m : missing) msg += " " + m;
    throw IncompleteError(msg);
  }

  Conversation c;
  c.id = id;
  c.split = units.front().unit.split;
  for (const auto& [mi, entry] : messages) {
    std::vector<Part> parts;
    for (const auto& [pi, slot] : entry.second) {
      Part p{slot.kind, {}};
      for (const auto* t : slot.chunks) p.text += t->translated_text;
      parts.push_back(std::move(p));
    }
    c.messages.push_back({entry.first, join_parts(parts), mi});
  }
  return c;
}

// Groups units by conversation id, keeping first-seen order of ids.
template <typename Unit, typename IdOf>
std::vector<std::vector<Unit>> group_by_conversation(std::span<const Unit> units, IdOf&& id_of) {
  std::vector<std::vector<Unit>> groups;
  std::map<std::string, std::size_t> slot;
  for (const auto& u : units) {
    const std::string& id = id_of(u);
    auto [it, inserted] = slot.try_emplace(id, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(u);
  }
  return groups;
}

// Throws ValidationError unless `translated` has the same message count,
// roles, indices and per-message part structure as `source`.
inline void validate_structure(const Conversation& source, const Conversation& translated) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("candidate for '" + source.id + "' does not match source structure: " + what);
  };
  if (source.messages.size() != translated.messages.size()) {
    fail(std::to_string(translated.messages.size()) + " messages vs " + std::to_string(source.messages.size()));
  }
  for (std::size_t i = 0; i < source.messages.size(); ++i) {
    const auto& a = source.messages[i];
    const auto& b = translated.messages[i];
    if (a.role != b.role) fail("role differs at message " + std::to_string(i));
    if (a.index != b.index) fail("index differs at message " + std::to_string(i));
    const auto pa = split_parts(a.content);
    const auto pb = split_parts(b.content, "candidate message " + std::to_string(i));
    auto kinds = [](const std::vector<Part>& ps) {
      std::vector<PartKind> k;
      for (const auto& p : ps) k.push_back(p.kind);
      return k;
    };
    if (kinds(pa) != kinds(pb)) fail("part structure differs at message " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// Unit files

inline ordered_json to_json(const TranslationUnit& u) {
  ordered_json j = ordered_json::object();
  j["conversation_id"] = u.conversation_id;
  j["split"] = u.split;
  j["message_index"] = u.message_index;
  j["part_type"] = std::string(to_string(u.part_type));
  j["part_index"] = u.part_index;
  j["chunk_index"] = u.chunk_index;
  j["chunk_count"] = u.chunk_count;
  j["role"] = std::string(to_string(u.role));
  j["source_text"] = u.source_text;
  return j;
}

inline ordered_json to_json(const TranslatedUnit& t) {
  auto j = to_json(t.unit);
  j["translated_text"] = t.translated_text;
  j["translator_id"] = t.translator_id;
  return j;
}

inline TranslationUnit unit_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ValidationError("unit is not a JSON object");
  auto index = [&](const char* name) {
    const auto& v = detail::require_field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw ValidationError(std::string("field '") + name + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
  };
  TranslationUnit u;
  u.conversation_id = detail::require_string(j, "conversation_id");
  if (auto it = j.find("split"); it != j.end() && it->is_string()) u.split = it->get<std::string>();
  u.message_index = index("message_index");
  const auto kind = parse_part_kind(detail::require_string(j, "part_type"));
  if (!kind) throw ValidationError("unknown part_type");
  u.part_type = *kind;
  u.part_index = index("part_index");
  u.chunk_index = index("chunk_index");
  u.chunk_count = index("chunk_count");
  const auto role = parse_role(detail::require_string(j, "role"));
  if (!role) throw ValidationError("unknown role");
  u.role = *role;
  u.source_text = detail::require_string(j, "source_text");
  return u;
}

inline TranslatedUnit translated_unit_from_json(const ordered_json& j) {
  return {unit_from_json(j), detail::require_string(j, "translated_text"), detail::require_string(j, "translator_id")};
}

template <typename T, typename Parse>
std::vector<T> read_jsonl(std::istream& in, Parse&& parse) {
  std::vector<T> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(ordered_json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": malformed JSON: " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<TranslationUnit> read_units(std::istream& in) {
  return read_jsonl<TranslationUnit>(in, unit_from_json);
}

inline std::vector<TranslatedUnit> read_translated_units(std::istream& in) {
  return read_jsonl<TranslatedUnit>(in, translated_unit_from_json);
}

}  // namespace sftc
