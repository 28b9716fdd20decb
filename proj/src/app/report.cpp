#include "superx/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "superx/error.hpp"

namespace superx {

  using nlohmann::ordered_json;

  std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::info:
        return "info";
    }
    return "info";
  }

  Status parse_status(std::string_view text) {
    if (text == "pass") {
      return Status::pass;
    }
    if (text == "fail") {
      return Status::fail;
    }
    if (text == "info") {
      return Status::info;
    }
    throw ParseError("unknown status '" + std::string(text) + "'");
  }

  ordered_json to_json(Report const& r) {
    ordered_json j;
    j["command"] = r.command;
    j["group"]   = r.group ? ordered_json(*r.group) : ordered_json(nullptr);
    j["status"]  = to_string(r.status);
    j["payload"] = r.payload;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
  }

  Report report_from_json(ordered_json const& j) {
    try {
      if (!j.is_object() || j.size() != 5) {
        throw ParseError("report must be an object with five members");
      }
      Report r;
      r.command = j.at("command").get<std::string>();
      if (auto const& g = j.at("group"); !g.is_null()) {
        r.group = g.get<std::string>();
      }
      r.status     = parse_status(j.at("status").get<std::string>());
      r.payload    = j.at("payload");
      r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
      if (!r.payload.is_object()) {
        throw ParseError("report payload must be an object");
      }
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed report: ") + e.what());
    }
  }

  Format parse_format(std::string_view text) {
    if (text == "text") {
      return Format::text;
    }
    if (text == "json") {
      return Format::json;
    }
    if (text == "csv") {
      return Format::csv;
    }
    throw ParseError("unknown format '" + std::string(text) + "'");
  }

  namespace {

    std::string cell(ordered_json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "-";
      }
      return v.dump();
    }

    std::string csv_cell(ordered_json const& v) {
      std::string s = v.is_null() ? "" : cell(v);
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') {
          quoted += '"';
        }
        quoted += c;
      }
      return quoted + '"';
    }

    std::vector<std::string> columns(ordered_json const& rows) {
      std::vector<std::string> keys;
      for (auto const& row : rows) {
        for (auto const& [k, v] : row.items()) {
          if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            keys.push_back(k);
          }
        }
      }
      return keys;
    }

    ordered_json const* rows_of(Report const& r) {
      auto it = r.payload.find("rows");
      if (it == r.payload.end() || !it->is_array()) {
        return nullptr;
      }
      return &*it;
    }

    bool is_table(ordered_json const& v) {
      return v.is_array() && !v.empty()
             && std::all_of(v.begin(), v.end(),
                            [](auto const& row) { return row.is_object(); });
    }

    void print_table(std::ostream& out, ordered_json const& rows) {
      auto const               keys = columns(rows);
      std::vector<std::size_t> width(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        width[i] = keys[i].size();
        for (auto const& row : rows) {
          if (row.contains(keys[i])) {
            width[i] = std::max(width[i], cell(row[keys[i]]).size());
          }
        }
      }
      auto const line = [&](auto const& value_of) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
          std::string const v = value_of(i);
          out << v;
          if (i + 1 < keys.size()) {
            out << std::string(width[i] - v.size() + 2, ' ');
          }
        }
        out << '\n';
      };
      line([&](std::size_t i) { return keys[i]; });
      for (auto const& row : rows) {
        line([&](std::size_t i) {
          return row.contains(keys[i]) ? cell(row[keys[i]]) : std::string();
        });
      }
    }

    std::string render_text(Report const& r) {
      std::ostringstream out;
      out << r.command;
      if (r.group) {
        out << ' ' << *r.group;
      }
      out << ": " << to_string(r.status) << " (" << r.elapsed_ms << " ms)\n";
      for (auto const& [k, v] : r.payload.items()) {
        if (k == "rows" || is_table(v)) {
          continue;
        }
        if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
          out << k << ":\n" << v.get<std::string>();
          if (v.get<std::string>().back() != '\n') {
            out << '\n';
          }
        } else {
          out << k << ": " << cell(v) << '\n';
        }
      }
      for (auto const& [k, v] : r.payload.items()) {
        if (k != "rows" && is_table(v)) {
          out << '\n' << k << ":\n";
          print_table(out, v);
        }
      }
      if (ordered_json const* rows = rows_of(r); rows != nullptr && !rows->empty()) {
        out << '\n';
        print_table(out, *rows);
      }
      return out.str();
    }

    std::string render_csv(Report const& r) {
      std::ostringstream  out;
      ordered_json const* rows = rows_of(r);
      if (rows == nullptr) {
        out << "key,value\n";
        for (auto const& [k, v] : r.payload.items()) {
          out << csv_cell(k) << ',' << csv_cell(v) << '\n';
        }
        return out.str();
      }
      auto const keys = columns(*rows);
      for (std::size_t i = 0; i < keys.size(); ++i) {
        out << (i ? "," : "") << csv_cell(keys[i]);
      }
      out << '\n';
      for (auto const& row : *rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
          out << (i ? "," : "")
              << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
        }
        out << '\n';
      }
      return out.str();
    }

  }  // namespace

  std::string render(Report const& r, Format f) {
    switch (f) {
      case Format::json:
        return to_json(r).dump(2) + '\n';
      case Format::csv:
        return render_csv(r);
      case Format::text:
        break;
    }
    return render_text(r);
  }

}  // namespace superx
