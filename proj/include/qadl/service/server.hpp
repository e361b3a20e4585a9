// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADL_SERVICE_SERVER_HPP_
#define QADL_SERVICE_SERVER_HPP_

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace qadl::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  /// Directory of UI assets served at `/`. A placeholder page is served
  /// when empty.
  std::string static_dir;
};

class Server {
 public:
  explicit Server(ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket; returns the bound port or -1.
  int bind();
  /// Serves until stop() is called. bind() must have succeeded.
  bool listen();
  void stop();
  void wait_until_ready() const;
  int port() const { return port_; }

 private:
  void install_routes();

  ServerOptions options_;
  std::unique_ptr<httplib::Server> http_;
  int port_ = -1;
};

}  // namespace qadl::service

#endif  // QADL_SERVICE_SERVER_HPP_
