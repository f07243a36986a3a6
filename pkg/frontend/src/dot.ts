// DOT download.  The bytes always come from the service's own export
// (render mode "dot"), so the saved file matches `gddx prove --format dot`
// exactly; the client only names the file and hands it to the browser.

export function dotFilename(goal: string | null): string {
  const slug = (goal ?? "proof").replace(/[^A-Za-z0-9]+/g, "_").replace(/^_+|_+$/g, "");
  return `${slug || "proof"}.dot`;
}

export function triggerDownload(text: string, filename: string): void {
  const url = URL.createObjectURL(new Blob([text], { type: "text/vnd.graphviz" }));
  const a = document.createElement("a");
  a.href = url;
  a.download = filename;
  a.click();
  URL.revokeObjectURL(url);
}
