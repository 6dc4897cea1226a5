//! Just enough HTTP/1.1 to talk to a running server: one request per
//! connection, body read to EOF.

use std::net::SocketAddr;
use std::sync::Arc;

use codepark::server::{router, AppState};
use tokio::io::{AsyncReadExt, AsyncWriteExt};
use tokio::net::{TcpListener, TcpStream};

pub struct Reply {
    pub status: u16,
    pub body: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_slice(&self.body).expect("json body")
    }
}

/// Bind an ephemeral port and serve `state` in the background.
pub async fn spawn(state: Arc<AppState>) -> SocketAddr {
    let listener = TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(async move { axum::serve(listener, router(state, None)).await.unwrap() });
    addr
}

pub async fn request(addr: SocketAddr, method: &str, path: &str, body: &[u8]) -> Reply {
    let mut stream = TcpStream::connect(addr).await.unwrap();
    let head = format!(
        "{method} {path} HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\nContent-Type: application/json\r\nContent-Length: {}\r\n\r\n",
        body.len()
    );
    stream.write_all(head.as_bytes()).await.unwrap();
    stream.write_all(body).await.unwrap();
    let mut raw = Vec::with_capacity(1 << 20);
    stream.read_to_end(&mut raw).await.unwrap();
    parse(&raw)
}

pub async fn get(addr: SocketAddr, path: &str) -> Reply {
    request(addr, "GET", path, b"").await
}

fn parse(raw: &[u8]) -> Reply {
    let split = raw.windows(4).position(|w| w == b"\r\n\r\n").expect("header terminator");
    let head = std::str::from_utf8(&raw[..split]).unwrap();
    let status = head.split(' ').nth(1).unwrap().parse().unwrap();
    let body = raw[split + 4..].to_vec();
    let length = head
        .lines()
        .find_map(|l| l.to_ascii_lowercase().strip_prefix("content-length:").map(|v| v.trim().parse::<usize>().unwrap()));
    if let Some(n) = length {
        assert_eq!(body.len(), n, "short body");
    }
    Reply { status, body }
}

/// `readers` clients each fetch `path` `rounds` times at once. Returns the
/// sorted latencies and whether every body was identical.
pub async fn concurrent_reads(addr: SocketAddr, path: &str, readers: usize, rounds: usize) -> (Vec<std::time::Duration>, bool) {
    let path = Arc::new(path.to_string());
    let barrier = Arc::new(tokio::sync::Barrier::new(readers));
    let tasks: Vec<_> = (0..readers)
        .map(|_| {
            let (path, barrier) = (path.clone(), barrier.clone());
            tokio::spawn(async move {
                barrier.wait().await;
                let mut out = Vec::with_capacity(rounds);
                for _ in 0..rounds {
                    let t = std::time::Instant::now();
                    let r = get(addr, &path).await;
                    assert_eq!(r.status, 200);
                    out.push((t.elapsed(), r.body));
                }
                out
            })
        })
        .collect();
    let mut times = Vec::new();
    let mut first: Option<Vec<u8>> = None;
    let mut identical = true;
    for t in tasks {
        for (d, body) in t.await.unwrap() {
            times.push(d);
            match &first {
                None => first = Some(body),
                Some(f) => identical &= *f == body,
            }
        }
    }
    times.sort();
    (times, identical)
}
