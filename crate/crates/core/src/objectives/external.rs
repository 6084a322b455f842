//! Black-box objectives served by an external worker process.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, Command, ExitStatus, Stdio};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use crate::base::{Direction, Objective};
use crate::error::{Error, Result};
use crate::objectives::protocol::{Request, Response, PROTOCOL_VERSION};

#[derive(Debug, Clone, PartialEq)]
pub struct ExternalObjectiveConfig {
    /// Program followed by its arguments.
    pub command: Vec<String>,
    pub dimension: usize,
    pub direction: Direction,
    /// Maximum wait for any single reply, including the handshake.
    pub timeout: Duration,
}

struct Worker {
    child: Child,
    stdin: Option<ChildStdin>,
    lines: Receiver<String>,
    next_id: u64,
    timeout: Duration,
}

impl Worker {
    fn send(&mut self, request: &Request) -> Result<()> {
        let stdin = self
            .stdin
            .as_mut()
            .ok_or_else(|| Error::WorkerCrashed("stdin already closed".into()))?;
        writeln!(stdin, "{request}")
            .and_then(|()| stdin.flush())
            .map_err(|e| Error::WorkerCrashed(format!("write failed: {e}")))
    }

    fn receive(&mut self) -> Result<Response> {
        match self.lines.recv_timeout(self.timeout) {
            Ok(line) => Response::parse(&line),
            Err(RecvTimeoutError::Timeout) => Err(Error::WorkerTimeout(self.timeout)),
            Err(RecvTimeoutError::Disconnected) => {
                let status = self.child.wait().ok();
                Err(Error::WorkerCrashed(format!(
                    "worker closed its output (status {})",
                    status.map_or_else(|| "unknown".to_string(), |s| s.to_string())
                )))
            }
        }
    }
}

/// A live worker process, exclusive to one run.
pub struct ExternalObjective {
    config: ExternalObjectiveConfig,
    worker: Mutex<Worker>,
}

impl ExternalObjective {
    /// Launches the worker and performs the handshake.
    pub fn spawn(config: ExternalObjectiveConfig) -> Result<Self> {
        let (program, args) = config
            .command
            .split_first()
            .ok_or_else(|| Error::InvalidConfig("empty worker command".into()))?;
        let mut child = Command::new(program)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn()?;
        let stdin = child.stdin.take();
        let stdout = child.stdout.take().expect("stdout is piped");
        let (tx, rx) = mpsc::channel();
        thread::spawn(move || {
            for line in BufReader::new(stdout).lines() {
                match line {
                    Ok(line) => {
                        if tx.send(line).is_err() {
                            break;
                        }
                    }
                    Err(_) => break,
                }
            }
        });

        let mut worker = Worker {
            child,
            stdin,
            lines: rx,
            next_id: 0,
            timeout: config.timeout,
        };
        worker.send(&Request::Hello {
            version: PROTOCOL_VERSION,
        })?;
        match worker.receive()? {
            Response::Ready { dimension } if dimension == config.dimension => {}
            Response::Ready { dimension } => {
                return Err(Error::Protocol(format!(
                    "worker reports dimension {dimension}, expected {}",
                    config.dimension
                )))
            }
            other => return Err(Error::Protocol(format!("expected READY, got {other}"))),
        }
        Ok(Self {
            config,
            worker: Mutex::new(worker),
        })
    }

    pub fn config(&self) -> &ExternalObjectiveConfig {
        &self.config
    }

    /// Sends one EVAL request and waits for its RESULT.
    pub fn external_eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.config.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.config.dimension,
                got: x.len(),
            });
        }
        let mut worker = self.worker.lock().unwrap_or_else(|p| p.into_inner());
        let id = worker.next_id;
        worker.next_id += 1;
        worker.send(&Request::Eval {
            id,
            values: x.to_vec(),
        })?;
        match worker.receive()? {
            Response::Result { id: got, value } if got == id => Ok(value),
            Response::Result { id: got, .. } => Err(Error::Protocol(format!(
                "reply id {got} does not match request id {id}"
            ))),
            other => Err(Error::Protocol(format!("expected RESULT, got {other}"))),
        }
    }

    /// Sends BYE and waits for the worker to exit.
    pub fn shutdown(self) -> Result<ExitStatus> {
        let mut worker = self.worker.into_inner().unwrap_or_else(|p| p.into_inner());
        let timeout = worker.timeout;
        worker.send(&Request::Bye)?;
        drop(worker.stdin.take());
        let deadline = Instant::now() + timeout;
        loop {
            if let Some(status) = worker.child.try_wait()? {
                return Ok(status);
            }
            if Instant::now() >= deadline {
                let _ = worker.child.kill();
                return Err(Error::WorkerTimeout(timeout));
            }
            thread::sleep(Duration::from_millis(5));
        }
    }
}

impl Drop for Worker {
    fn drop(&mut self) {
        if let Ok(Some(_)) = self.child.try_wait() {
            return;
        }
        if self.stdin.is_some() {
            let _ = self.send(&Request::Bye);
            drop(self.stdin.take());
            for _ in 0..40 {
                if let Ok(Some(_)) = self.child.try_wait() {
                    return;
                }
                thread::sleep(Duration::from_millis(5));
            }
        }
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

impl Objective for ExternalObjective {
    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        self.external_eval(x)
    }
}
