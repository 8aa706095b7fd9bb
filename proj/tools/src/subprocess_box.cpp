// Copyright 2026 The rkinterp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subprocess_box.hpp"

#include <csignal>
#include <cstdlib>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

namespace rkinterp::cli {

SubprocessBlackBox::SubprocessBlackBox(const std::string& command, PrimeField field,
                                       std::size_t nvars)
    : field_(field), nvars_(nvars) {
  // A dead evaluator must surface as a write error, not kill the process.
  std::signal(SIGPIPE, SIG_IGN);
  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0) throw std::runtime_error("pipe() failed");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw std::runtime_error("pipe() failed");
  }
  const std::string q = std::to_string(field.modulus());
  const std::string n = std::to_string(nvars);
  pid_ = fork();
  if (pid_ < 0) throw std::runtime_error("fork() failed");
  if (pid_ == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    setenv("RKINTERP_FIELD", q.c_str(), 1);
    setenv("RKINTERP_VARS", n.c_str(), 1);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  to_child_ = fdopen(in_pipe[1], "w");
  from_child_ = fdopen(out_pipe[0], "r");
  if (!to_child_ || !from_child_) throw std::runtime_error("fdopen() failed");
}

SubprocessBlackBox::~SubprocessBlackBox() {
  if (to_child_) std::fclose(to_child_);
  if (from_child_) std::fclose(from_child_);
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

Fe SubprocessBlackBox::evaluate(std::span<const Fe> point) {
  if (point.size() != nvars_) throw std::invalid_argument("probe point has the wrong length");
  std::lock_guard lock(mu_);
  std::string line;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j) line += ' ';
    line += std::to_string(point[j].v);
  }
  line += '\n';
  if (std::fputs(line.c_str(), to_child_) == EOF || std::fflush(to_child_) != 0) {
    throw std::runtime_error("evaluator closed its input");
  }
  std::string reply;
  int ch;
  while ((ch = std::fgetc(from_child_)) != EOF && ch != '\n') reply += static_cast<char>(ch);
  if (ch == EOF && reply.empty()) throw std::runtime_error("evaluator exited without replying");
  while (!reply.empty() && (reply.back() == '\r' || reply.back() == ' ')) reply.pop_back();
  try {
    return field_.from_decimal(reply);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("evaluator replied with a non-integer: '" + reply + "'");
  }
}

}  // namespace rkinterp::cli
