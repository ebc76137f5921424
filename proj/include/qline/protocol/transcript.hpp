#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qline/core/quantum_state.hpp"

namespace qline::protocol {

/// Raised when a party acts out of protocol order.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Time scheme: t0 secret distribution, t1 quantum transmission,
/// t2 interaction and measurement.
enum class Stage { T0 = 0, T1 = 1, T2 = 2 };

enum class MessageKind { SecretParams, QubitBatch, Delta, Outcome, ThetaPrime, Result };

std::string_view to_string(Stage s);
std::string_view to_string(MessageKind k);
Stage parse_stage(std::string_view s);
MessageKind parse_kind(std::string_view s);

struct Field {
  std::string key;
  int value;
  bool operator==(const Field&) const = default;
};

struct Message {
  Stage stage = Stage::T0;
  std::string sender;
  std::string receiver;
  MessageKind kind = MessageKind::SecretParams;
  std::vector<Field> payload;
  /// Travelling quantum state, only on qubit-batch messages and only when recording is on.
  std::optional<core::QuantumState> snapshot;

  /// Value of a payload field; throws std::out_of_range when absent.
  int get(std::string_view key) const;
  std::optional<int> find(std::string_view key) const;
};

/// Ordered message log. Appending enforces non-decreasing stages and that
/// qubit payloads appear only on qubit-batch messages.
class Transcript {
 public:
  explicit Transcript(bool record_states = false) : record_states_(record_states) {}

  bool records_states() const { return record_states_; }

  void append(Message m);
  void append(Stage stage, std::string sender, std::string receiver, MessageKind kind,
              std::vector<Field> payload);

  const std::vector<Message>& messages() const { return messages_; }
  std::size_t size() const { return messages_.size(); }

  /// Messages a party sent or received.
  std::vector<Message> view_of(std::string_view party) const;
  std::vector<Message> of_kind(MessageKind kind) const;

  /// Index of the first message matching kind and (optionally) a payload key.
  std::optional<std::size_t> index_of(MessageKind kind, std::string_view key = {}) const;

  /// One line per message: stage, sender, receiver, kind, payload (k=v;k=v),
  /// tab separated. Snapshots are not serialized.
  std::string serialize() const;
  static Transcript parse(std::string_view text);

 private:
  bool record_states_;
  std::vector<Message> messages_;
};

}  // namespace qline::protocol
