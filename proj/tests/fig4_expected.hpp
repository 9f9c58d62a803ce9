#pragma once

#include <string>
#include <vector>

// Reference families for the 21-edge two-sink network in data/fig4.net.
namespace fig4 {

using Pairs = std::vector<std::vector<std::string>>;

inline const Pairs kPrimaryT1R1 = {{"e1"}, {"e4"}, {"e6"}, {"e10"}, {"e12"}, {"e18"}, {"e20"}};

// The expected 14-pair size-2 list for t1.
inline const Pairs kPrimaryT1R2Listed = {
    {"e1", "e4"},   {"e1", "e10"},  {"e1", "e12"},  {"e1", "e20"},  {"e6", "e10"},  {"e6", "e12"},  {"e6", "e18"},
    {"e6", "e20"},  {"e10", "e12"}, {"e10", "e18"}, {"e10", "e20"}, {"e12", "e18"}, {"e12", "e20"}, {"e18", "e20"},
};

inline const Pairs kRT1R2 = {
    {"e1", "e2"},   {"e1", "e3"},   {"e1", "e4"},   {"e1", "e5"},   {"e1", "e6"},   {"e1", "e7"},   {"e1", "e8"},
    {"e1", "e10"},  {"e1", "e12"},  {"e1", "e13"},  {"e1", "e14"},  {"e1", "e16"},  {"e1", "e17"},  {"e1", "e18"},
    {"e1", "e20"},  {"e2", "e3"},   {"e2", "e4"},   {"e2", "e5"},   {"e2", "e6"},   {"e2", "e10"},  {"e2", "e12"},
    {"e2", "e13"},  {"e2", "e14"},  {"e2", "e17"},  {"e2", "e20"},  {"e3", "e4"},   {"e3", "e5"},   {"e3", "e6"},
    {"e3", "e7"},   {"e3", "e8"},   {"e3", "e12"},  {"e3", "e13"},  {"e3", "e14"},  {"e3", "e16"},  {"e3", "e17"},
    {"e3", "e18"},  {"e3", "e20"},  {"e4", "e5"},   {"e4", "e6"},   {"e4", "e7"},   {"e4", "e8"},   {"e4", "e10"},
    {"e4", "e12"},  {"e4", "e13"},  {"e4", "e14"},  {"e4", "e16"},  {"e4", "e17"},  {"e4", "e18"},  {"e4", "e20"},
    {"e5", "e6"},   {"e5", "e7"},   {"e5", "e8"},   {"e5", "e10"},  {"e5", "e12"},  {"e5", "e16"},  {"e5", "e18"},
    {"e6", "e7"},   {"e6", "e8"},   {"e6", "e10"},  {"e6", "e12"},  {"e6", "e13"},  {"e6", "e14"},  {"e6", "e16"},
    {"e6", "e17"},  {"e6", "e18"},  {"e6", "e20"},  {"e7", "e10"},  {"e7", "e12"},  {"e7", "e13"},  {"e7", "e14"},
    {"e7", "e17"},  {"e7", "e20"},  {"e8", "e10"},  {"e8", "e12"},  {"e8", "e13"},  {"e8", "e14"},  {"e8", "e17"},
    {"e8", "e20"},  {"e10", "e12"}, {"e10", "e13"}, {"e10", "e14"}, {"e10", "e16"}, {"e10", "e17"}, {"e10", "e18"},
    {"e10", "e20"}, {"e12", "e13"}, {"e12", "e14"}, {"e12", "e16"}, {"e12", "e17"}, {"e12", "e18"}, {"e12", "e20"},
    {"e13", "e16"}, {"e13", "e18"}, {"e14", "e16"}, {"e14", "e18"}, {"e16", "e17"}, {"e16", "e20"}, {"e17", "e18"},
    {"e18", "e20"},
};

struct Class {
  std::vector<std::string> key;
  std::vector<std::string> members;
};

inline const std::vector<Class> kClassesT1 = {
    {{"e1"}, {"e1"}},
    {{"e18"}, {"e2", "e7", "e8", "e16", "e18"}},
    {{"e10"}, {"e3", "e10"}},
    {{"e4"}, {"e4"}},
    {{"e20"}, {"e5", "e13", "e14", "e17", "e20"}},
    {{"e6"}, {"e6"}},
    {{}, {"e9", "e11", "e15", "e19", "e21"}},
    {{"e12"}, {"e12"}},
};

}  // namespace fig4
