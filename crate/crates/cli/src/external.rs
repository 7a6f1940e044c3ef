//! An online strategy played by a child process.
//!
//! Each step the process receives one line: the current sequence as
//! space-separated `pos:color` pairs, positions counted from 0, with the new
//! point written as color `0`. It must answer with a line holding `1` or `2`.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};

use bottomless::constructions::OnlineStrategy;
use bottomless::{Color, Error, Result};

pub struct ExternalStrategy {
    name: String,
    child: Child,
    stdin: Option<ChildStdin>,
    stdout: BufReader<ChildStdout>,
}

impl ExternalStrategy {
    /// Starts `command` through `sh -c`.
    pub fn spawn(command: &str) -> std::io::Result<Self> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn()?;
        let stdin = child.stdin.take();
        let stdout = BufReader::new(child.stdout.take().expect("piped"));
        Ok(Self {
            name: command.to_string(),
            child,
            stdin,
            stdout,
        })
    }

    fn protocol(&self, message: String) -> Error {
        Error::Strategy(format!("external strategy {:?}: {message}", self.name))
    }
}

pub fn encode(view: &[Option<Color>]) -> String {
    view.iter()
        .enumerate()
        .map(|(i, c)| format!("{i}:{}", c.map_or(0, Color::id)))
        .collect::<Vec<_>>()
        .join(" ")
}

impl OnlineStrategy for ExternalStrategy {
    fn name(&self) -> &str {
        &self.name
    }

    fn choose(&mut self, view: &[Option<Color>]) -> Result<u32> {
        let line = encode(view);
        let stdin = self.stdin.as_mut().expect("open until drop");
        if let Err(e) = writeln!(stdin, "{line}").and_then(|()| stdin.flush()) {
            return Err(self.protocol(format!("cannot send the sequence ({e})")));
        }
        let mut reply = String::new();
        match self.stdout.read_line(&mut reply) {
            Ok(0) => Err(self.protocol("closed its output without answering".into())),
            Err(e) => Err(self.protocol(format!("cannot read the answer ({e})"))),
            Ok(_) => match reply.trim() {
                "1" => Ok(1),
                "2" => Ok(2),
                other => Err(self.protocol(format!("answered {other:?}, expected 1 or 2"))),
            },
        }
    }
}

impl Drop for ExternalStrategy {
    fn drop(&mut self) {
        drop(self.stdin.take());
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}
