// Copyright 2026 The wmreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "wmreg/session.hpp"

namespace wmreg {

// Line-oriented front end over a Session. Only describe, ask and tick touch
// session state; anything malformed is reported and leaves it as it was.
class Repl {
 public:
  Repl(Session &session, std::ostream &out, std::ostream &err,
       SymbolStyle style = SymbolStyle::kShort)
      : session_(session), out_(out), err_(err), style_(style) {}

  // Returns false once the user asks to quit.
  bool execute(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string cmd;
    if (!(in >> cmd)) return true;
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    try {
      if (cmd == "quit" || cmd == "exit") return false;
      if (cmd == "describe") {
        describe(rest);
      } else if (cmd == "ask") {
        ask(rest);
      } else if (cmd == "wm") {
        show_wm(rest);
      } else if (cmd == "tick") {
        tick(rest);
      } else if (cmd == "policy") {
        out_ << session_.config().policy.label() << "\n";
      } else if (cmd == "help") {
        out_ << kHelp;
      } else {
        err_ << "unknown command: " << cmd << "\n";
      }
    } catch (const Error &e) {
      err_ << "error: " << e.what() << "\n";
    }
    return true;
  }

  // Reads commands until quit or end of input.
  void loop(std::istream &in, bool prompt = true) {
    std::string line;
    while (true) {
      if (prompt) out_ << "> " << std::flush;
      if (!std::getline(in, line)) break;
      if (!execute(line)) break;
    }
  }

  static constexpr const char *kHelp =
      "describe <face> : <prop,...>   human describes a face\n"
      "ask <face>                     robot describes a face\n"
      "wm [face]                      show working memory\n"
      "tick <seconds>                 advance the virtual clock\n"
      "policy                         show the forgetting policy\n"
      "quit\n";

 private:
  static std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
  }

  std::string render(const PropertyList &props) const {
    std::string out = "[";
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (i) out += ", ";
      out += session_.domain().display(props[i], style_);
    }
    return out + "]";
  }

  void describe(const std::string &args) {
    auto colon = args.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kParse, "usage: describe <face> : <prop,...>");
    }
    EntityId face = session_.domain().resolve_entity(trim(args.substr(0, colon)));
    PropertyList props;
    std::istringstream list(args.substr(colon + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      item = trim(item);
      if (!item.empty()) props.push_back(session_.domain().resolve_property(item));
    }
    if (props.empty()) throw Error(ErrorCode::kParse, "describe needs at least one property");
    const PhaseRecord &r = session_.human_turn(face, props);
    out_ << "turn " << r.turn << ": " << resolution_kind_name(r.resolution->kind);
    if (r.resolution->referent) out_ << " " << *r.resolution->referent;
    out_ << "\n";
  }

  void ask(const std::string &args) {
    if (args.empty() || args.find(' ') != std::string::npos) {
      throw Error(ErrorCode::kParse, "usage: ask <face>");
    }
    EntityId face = session_.domain().resolve_entity(args);
    const PhaseRecord &r = session_.robot_turn(face);
    const Description &d = *r.description;
    out_ << "robot: ";
    for (std::size_t i = 0; i < d.selected.size(); ++i) {
      if (i) out_ << ", ";
      out_ << session_.domain().display(d.selected[i].property, style_) << " ("
           << provenance_name(d.selected[i].source) << ")";
    }
    if (!d.fully_discriminating) out_ << " [not discriminating]";
    out_ << "\n";
  }

  void show_wm(const std::string &args) {
    const WorkingMemory &wm = session_.memory();
    if (!args.empty()) {
      EntityId face = session_.domain().resolve_entity(args);
      out_ << face << " " << render(wm.snapshot(face)) << "\n";
      return;
    }
    for (const auto &e : session_.domain().entities()) {
      PropertyList snap = wm.snapshot(e);
      if (!snap.empty()) out_ << e << " " << render(snap) << "\n";
    }
  }

  void tick(const std::string &args) {
    std::size_t used = 0;
    double seconds = 0;
    try {
      seconds = std::stod(args, &used);
    } catch (const std::exception &) {
      throw Error(ErrorCode::kParse, "usage: tick <seconds>");
    }
    if (used != args.size()) throw Error(ErrorCode::kParse, "usage: tick <seconds>");
    Millis step = seconds_to_millis(seconds);
    session_.tick(step);
    out_ << "t=" << format_seconds(session_.memory().now()) << "\n";
  }

  Session &session_;
  std::ostream &out_;
  std::ostream &err_;
  SymbolStyle style_;
};

}  // namespace wmreg
