// Copyright 2026 The efgval Authors. All rights reserved.
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

#include "efgval/game_format.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace efgval {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw EfgError(ErrorCode::kSyntax, where + ": " + what);
}

const json& Field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) Fail(where, std::string("missing field '") + name + "'");
  return *it;
}

double Number(const json& value, const std::string& where) {
  if (!value.is_number()) Fail(where, "expected a number");
  return value.get<double>();
}

std::string String(const json& value, const std::string& where) {
  if (!value.is_string()) Fail(where, "expected a string");
  return value.get<std::string>();
}

NodeSpec ParseNode(const json& obj, const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected a node object");
  const std::string type = String(Field(obj, "type", where), where + ".type");
  NodeSpec spec;
  if (type == "terminal") {
    spec.kind = NodeKind::kTerminal;
    spec.utility = Number(Field(obj, "utility", where), where + ".utility");
    return spec;
  }
  const char* list_name = nullptr;
  if (type == "decision") {
    spec.kind = NodeKind::kDecision;
    const json& player = Field(obj, "player", where);
    if (!player.is_number_integer()) Fail(where + ".player", "expected 1 or 2");
    spec.player = player.get<int>();
    spec.infoset = String(Field(obj, "infoset", where), where + ".infoset");
    list_name = "actions";
  } else if (type == "chance") {
    spec.kind = NodeKind::kChance;
    list_name = "outcomes";
  } else {
    Fail(where + ".type", "unknown node type '" + type + "'");
  }
  const json& list = Field(obj, list_name, where);
  if (!list.is_array()) Fail(where + "." + list_name, "expected a list");
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string item =
        where + "." + list_name + "[" + std::to_string(i) + "]";
    if (!list[i].is_object()) Fail(item, "expected an object");
    spec.actions.push_back(String(Field(list[i], "action", item), item + ".action"));
    if (spec.kind == NodeKind::kChance) {
      spec.probs.push_back(Number(Field(list[i], "prob", item), item + ".prob"));
    }
    spec.children.push_back(ParseNode(Field(list[i], "child", item), item + ".child"));
  }
  return spec;
}

json WriteNode(const Game& game, NodeId id) {
  const Node& node = game.node(id);
  json obj;
  switch (node.kind) {
    case NodeKind::kTerminal:
      obj["type"] = "terminal";
      obj["utility"] = node.utility;
      return obj;
    case NodeKind::kDecision: {
      obj["type"] = "decision";
      obj["player"] = node.player;
      obj["infoset"] = node.infoset;
      json list = json::array();
      for (int a = 0; a < node.num_actions(); ++a) {
        list.push_back(json{{"action", node.actions[a]},
                            {"child", WriteNode(game, node.children[a])}});
      }
      obj["actions"] = std::move(list);
      return obj;
    }
    case NodeKind::kChance: {
      obj["type"] = "chance";
      json list = json::array();
      for (int a = 0; a < node.num_actions(); ++a) {
        list.push_back(json{{"action", node.actions[a]},
                            {"prob", node.chance_probs[a]},
                            {"child", WriteNode(game, node.children[a])}});
      }
      obj["outcomes"] = std::move(list);
      return obj;
    }
  }
  return obj;
}

}  // namespace

Game ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const size_t offset = std::min<size_t>(e.byte, text.size());
    const size_t line =
        1 + std::count(text.begin(), text.begin() + offset, '\n');
    throw EfgError(ErrorCode::kSyntax,
                   "line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) Fail("document", "expected an object");
  const std::string name = String(Field(doc, "name", "document"), "name");
  const json& players = Field(doc, "players", "document");
  if (!players.is_number_integer() || players.get<int>() != 2) {
    Fail("players", "only two-player games are supported");
  }
  NodeSpec root = ParseNode(Field(doc, "root", "document"), "root");
  return Game::FromSpec(name, root);
}

std::string SerializeGame(const Game& game) {
  json doc;
  doc["name"] = game.name();
  doc["players"] = 2;
  doc["root"] = WriteNode(game, game.root());
  return doc.dump(1) + "\n";
}

Game LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EfgError(ErrorCode::kIo, "cannot open game file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

}  // namespace efgval
