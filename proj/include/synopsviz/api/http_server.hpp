// Copyright 2026 The SynopsViz Authors
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

#pragma once

#include <memory>
#include <string>

#include "synopsviz/api/service.hpp"

namespace synopsviz::api {

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0: pick a free port
  std::size_t maxUploadBytes = std::size_t{1} << 30;

  /// Port taken from SYNOPSVIZ_PORT when set.
  static ServerOptions fromEnvironment();
};

/// HTTP/1.1 front end over a Service. listen() blocks until stop().
class HttpServer {
 public:
  HttpServer(Service& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; returns the bound port or -1.
  int bind();
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace synopsviz::api
