// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#include "semihilbert/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "semihilbert/error.hpp"

namespace semihilbert
{

namespace
{

std::string fmt15(double v)
{
  if (v == 0.0)
  {
    return "0";  // also folds -0
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double finite_number(const nlohmann::json &v, std::size_t k)
{
  if (!v.is_number())
  {
    throw Error(ErrorKind::Parse, "entry " + std::to_string(k) + " is not a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d))
  {
    throw Error(ErrorKind::Parse, "entry " + std::to_string(k) + " is not finite");
  }
  return d;
}

}  // namespace

nlohmann::json to_json(const Matrix &m)
{
  nlohmann::json data = nlohmann::json::array();
  for (const cplx &z : m.data())
  {
    data.push_back({z.real(), z.imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const nlohmann::json &j)
{
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
  {
    throw Error(ErrorKind::Parse, "matrix document needs rows, cols and data");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["data"].is_array())
  {
    throw Error(ErrorKind::Parse, "rows/cols must be nonnegative integers and data an array");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto &data = j["data"];
  if (data.size() != rows * cols)
  {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(rows * cols) + " entries, got " +
                                      std::to_string(data.size()));
  }
  std::vector<cplx> entries;
  entries.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k)
  {
    const auto &e = data[k];
    if (e.is_number())
    {
      entries.emplace_back(finite_number(e, k), 0.0);
    }
    else if (e.is_array() && e.size() == 2)
    {
      entries.emplace_back(finite_number(e[0], k), finite_number(e[1], k));
    }
    else
    {
      throw Error(ErrorKind::Parse, "entry " + std::to_string(k) + " must be [re, im]");
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix(const std::string &text)
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse(text);
  }
  catch (const nlohmann::json::exception &e)
  {
    throw Error(ErrorKind::Parse, e.what());
  }
  return matrix_from_json(j);
}

Matrix read_matrix(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorKind::Parse, "cannot open " + path.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void write_matrix(const std::filesystem::path &path, const Matrix &m)
{
  std::ofstream out(path);
  out << format_matrix(m) << '\n';
}

std::string format_matrix(const Matrix &m)
{
  std::string s = "{\"rows\": " + std::to_string(m.rows()) + ", \"cols\": " + std::to_string(m.cols()) +
                  ", \"data\": [";
  for (std::size_t k = 0; k < m.size(); ++k)
  {
    if (k > 0)
    {
      s += ", ";
    }
    s += "[" + fmt15(m.data()[k].real()) + ", " + fmt15(m.data()[k].imag()) + "]";
  }
  return s + "]}";
}

}  // namespace semihilbert
