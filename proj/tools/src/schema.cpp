#include "schema.hpp"

#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "config_schema_text.hpp"

namespace vacpol::cli
{
namespace
{
using nlohmann::json;

std::string where(YAML::Node const& node, std::string const& pointer)
{
    auto const m = node.Mark();
    if (m.line < 0)
    {
        return fmt::format("(command line) {}", pointer.empty() ? "/" : pointer);
    }
    return fmt::format(
        "{}:{}: {}", m.line + 1, m.column + 1, pointer.empty() ? "/" : pointer);
}

bool is_bool(YAML::Node const& n)
{
    if (!n.IsScalar())
        return false;
    bool b;
    return YAML::convert<bool>::decode(n, b) && n.Tag() != "!";
}

std::optional<double> as_number(YAML::Node const& n)
{
    if (!n.IsScalar() || n.Tag() == "!" || is_bool(n))
        return std::nullopt;
    double v;
    if (!YAML::convert<double>::decode(n, v) || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<long long> as_integer(YAML::Node const& n)
{
    auto const v = as_number(n);
    if (!v || *v != std::floor(*v) || std::abs(*v) > 9e15)
        return std::nullopt;
    auto const& s = n.Scalar();
    if (s.find_first_of(".eE") != std::string::npos)
        return std::nullopt;
    return static_cast<long long>(*v);
}

bool matches_type(YAML::Node const& n, std::string const& type)
{
    if (type == "object")
        return n.IsMap();
    if (type == "array")
        return n.IsSequence();
    if (type == "boolean")
        return is_bool(n);
    if (type == "integer")
        return as_integer(n).has_value();
    if (type == "number")
        return as_number(n).has_value();
    if (type == "string")
        return n.IsScalar();
    return false;
}

bool equals(YAML::Node const& n, json const& value)
{
    if (value.is_string())
        return n.IsScalar() && n.Scalar() == value.get<std::string>();
    if (value.is_number())
    {
        auto const v = as_number(n);
        return v && *v == value.get<double>();
    }
    if (value.is_boolean())
    {
        bool b;
        return is_bool(n) && YAML::convert<bool>::decode(n, b)
               && b == value.get<bool>();
    }
    return false;
}

void check(YAML::Node const& n,
           json const& s,
           std::string const& ptr,
           std::vector<std::string>& errors)
{
    if (auto it = s.find("type"); it != s.end())
    {
        auto const type = it->get<std::string>();
        if (!matches_type(n, type))
        {
            errors.push_back(fmt::format("{}: expected {}", where(n, ptr), type));
            return;
        }
    }
    if (auto it = s.find("enum"); it != s.end())
    {
        bool found = false;
        std::vector<std::string> names;
        for (auto const& v : *it)
        {
            found = found || equals(n, v);
            names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        if (!found)
        {
            errors.push_back(fmt::format("{}: must be one of {}",
                                         where(n, ptr),
                                         fmt::join(names, ", ")));
            return;
        }
    }
    if (auto it = s.find("const"); it != s.end() && !equals(n, *it))
    {
        errors.push_back(fmt::format("{}: must equal {}", where(n, ptr), it->dump()));
    }
    if (auto it = s.find("not"); it != s.end())
    {
        std::vector<std::string> sub;
        check(n, *it, ptr, sub);
        if (sub.empty())
        {
            auto const text = it->contains("const") ? "equal " + (*it)["const"].dump()
                                                    : "match " + it->dump();
            errors.push_back(fmt::format("{}: must not {}", where(n, ptr), text));
        }
    }
    if (auto const v = as_number(n); v && !n.IsMap() && !n.IsSequence())
    {
        auto bound = [&](char const* key, auto fails, char const* text) {
            if (auto it = s.find(key); it != s.end() && fails(it->get<double>()))
            {
                errors.push_back(fmt::format(
                    "{}: must be {} {}", where(n, ptr), text, it->get<double>()));
            }
        };
        bound("minimum", [&](double b) { return *v < b; }, ">=");
        bound("maximum", [&](double b) { return *v > b; }, "<=");
        bound("exclusiveMinimum", [&](double b) { return *v <= b; }, ">");
        bound("exclusiveMaximum", [&](double b) { return *v >= b; }, "<");
    }
    if (auto it = s.find("minLength");
        it != s.end() && n.IsScalar()
        && n.Scalar().size() < it->get<std::size_t>())
    {
        errors.push_back(fmt::format("{}: string too short", where(n, ptr)));
    }
    if (n.IsMap())
    {
        json const empty = json::object();
        auto const& props = s.contains("properties") ? s["properties"] : empty;
        bool const closed = s.value("additionalProperties", true) == false;
        for (auto const& kv : n)
        {
            auto const key = kv.first.as<std::string>();
            std::string const child = ptr + "/" + key;
            if (props.contains(key))
            {
                check(kv.second, props[key], child, errors);
            }
            else if (closed)
            {
                errors.push_back(
                    fmt::format("{}: unknown key '{}'", where(kv.first, child), key));
            }
        }
        if (auto it = s.find("required"); it != s.end())
        {
            for (auto const& r : *it)
            {
                if (!n[r.get<std::string>()])
                {
                    errors.push_back(fmt::format("{}: missing required key '{}'",
                                                 where(n, ptr),
                                                 r.get<std::string>()));
                }
            }
        }
    }
    if (n.IsSequence())
    {
        if (auto it = s.find("minItems");
            it != s.end() && n.size() < it->get<std::size_t>())
        {
            errors.push_back(fmt::format("{}: needs at least {} items",
                                         where(n, ptr),
                                         it->get<std::size_t>()));
        }
        if (auto it = s.find("items"); it != s.end())
        {
            for (std::size_t i = 0; i < n.size(); ++i)
            {
                check(n[i], *it, fmt::format("{}/{}", ptr, i), errors);
            }
        }
    }
}
}  // namespace

std::vector<std::string> validate_document(YAML::Node const& doc,
                                           nlohmann::json const& schema)
{
    std::vector<std::string> errors;
    if (!doc || doc.IsNull())
    {
        return errors;
    }
    check(doc, schema, "", errors);
    return errors;
}

nlohmann::json const& config_schema()
{
    static nlohmann::json const s = nlohmann::json::parse(config_schema_text);
    return s;
}
}  // namespace vacpol::cli
