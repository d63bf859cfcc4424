/**
 * Spawns the real backend gateway for the test run and provides its base URL
 * to the workers via vitest's inject mechanism.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { createServer } from "node:net";
import type { TestProject } from "vitest/node";

declare module "vitest" {
  export interface ProvidedContext {
    apiBase: string;
  }
}

async function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const server = createServer();
    server.listen(0, "127.0.0.1", () => {
      const address = server.address();
      if (address && typeof address === "object") {
        const port = address.port;
        server.close(() => resolve(port));
      } else {
        reject(new Error("could not allocate a port"));
      }
    });
  });
}

let backend: ChildProcess | undefined;

export default async function setup(project: TestProject): Promise<() => void> {
  const python = process.env.FLOWTUTOR_PYTHON ?? "python3";
  const port = await freePort();
  const base = `http://127.0.0.1:${port}`;
  backend = spawn(python, ["-m", "flowtutor.cli", "serve", "--port", String(port)], {
    stdio: "ignore",
  });

  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${base}/healthz`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      backend.kill();
      throw new Error("backend gateway never became healthy");
    }
    await new Promise((r) => setTimeout(r, 150));
  }

  project.provide("apiBase", base);
  return () => {
    backend?.kill();
  };
}
