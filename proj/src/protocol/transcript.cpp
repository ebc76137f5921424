#include "qline/protocol/transcript.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace qline::protocol {

namespace {

constexpr std::array<std::string_view, 3> kStageNames{"t0", "t1", "t2"};
constexpr std::array<std::string_view, 6> kKindNames{"secret-params", "qubit-batch", "delta",
                                                     "outcome",       "theta-prime", "result"};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("transcript: bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(Stage s) { return kStageNames.at(static_cast<std::size_t>(s)); }
std::string_view to_string(MessageKind k) { return kKindNames.at(static_cast<std::size_t>(k)); }

Stage parse_stage(std::string_view s) {
  const auto it = std::find(kStageNames.begin(), kStageNames.end(), s);
  if (it == kStageNames.end()) throw std::invalid_argument("unknown stage '" + std::string(s) + "'");
  return static_cast<Stage>(it - kStageNames.begin());
}

MessageKind parse_kind(std::string_view s) {
  const auto it = std::find(kKindNames.begin(), kKindNames.end(), s);
  if (it == kKindNames.end()) throw std::invalid_argument("unknown message kind '" + std::string(s) + "'");
  return static_cast<MessageKind>(it - kKindNames.begin());
}

std::optional<int> Message::find(std::string_view key) const {
  for (const auto& f : payload) {
    if (f.key == key) return f.value;
  }
  return std::nullopt;
}

int Message::get(std::string_view key) const {
  if (auto v = find(key)) return *v;
  throw std::out_of_range("message has no field '" + std::string(key) + "'");
}

void Transcript::append(Message m) {
  if (!messages_.empty() && m.stage < messages_.back().stage) {
    throw ProtocolError("transcript: stage " + std::string(to_string(m.stage)) + " after " +
                        std::string(to_string(messages_.back().stage)));
  }
  if (m.snapshot && m.kind != MessageKind::QubitBatch) {
    throw ProtocolError("transcript: quantum payload on a classical message");
  }
  if (!record_states_) m.snapshot.reset();
  messages_.push_back(std::move(m));
}

void Transcript::append(Stage stage, std::string sender, std::string receiver, MessageKind kind,
                        std::vector<Field> payload) {
  append(Message{stage, std::move(sender), std::move(receiver), kind, std::move(payload), std::nullopt});
}

std::vector<Message> Transcript::view_of(std::string_view party) const {
  std::vector<Message> out;
  std::copy_if(messages_.begin(), messages_.end(), std::back_inserter(out),
               [&](const Message& m) { return m.sender == party || m.receiver == party; });
  return out;
}

std::vector<Message> Transcript::of_kind(MessageKind kind) const {
  std::vector<Message> out;
  std::copy_if(messages_.begin(), messages_.end(), std::back_inserter(out),
               [&](const Message& m) { return m.kind == kind; });
  return out;
}

std::optional<std::size_t> Transcript::index_of(MessageKind kind, std::string_view key) const {
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    const auto& m = messages_[i];
    if (m.kind == kind && (key.empty() || m.find(key))) return i;
  }
  return std::nullopt;
}

std::string Transcript::serialize() const {
  std::ostringstream os;
  for (const auto& m : messages_) {
    os << to_string(m.stage) << '\t' << m.sender << '\t' << m.receiver << '\t' << to_string(m.kind) << '\t';
    for (std::size_t i = 0; i < m.payload.size(); ++i) {
      if (i) os << ';';
      os << m.payload[i].key << '=' << m.payload[i].value;
    }
    os << '\n';
  }
  return os.str();
}

Transcript Transcript::parse(std::string_view text) {
  Transcript t;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    const auto cols = split(line, '\t');
    if (cols.size() != 5) throw std::invalid_argument("transcript: expected 5 columns");
    Message m{parse_stage(cols[0]), std::string(cols[1]), std::string(cols[2]), parse_kind(cols[3]), {}, {}};
    if (!cols[4].empty()) {
      for (auto item : split(cols[4], ';')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("transcript: bad field");
        m.payload.push_back({std::string(item.substr(0, eq)), parse_int(item.substr(eq + 1))});
      }
    }
    t.append(std::move(m));
  }
  return t;
}

}  // namespace qline::protocol
