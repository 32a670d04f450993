package beta ;

/** Generated class BetaC7. */
public class BetaC7 extends BetaC6 implements BetaSized {
    private int f0 = 0 ;
    public int shared = 1 ;
    private alpha . AlphaC2 helper = new alpha . AlphaC2 ( ) ;

    public BetaC7 ( ) { }
    public int getF0 ( ) { return f0 ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }

    private void work0 ( int p0 ) {
        int v = 0 ;
        v = v > 2 ? v : 2 ;
        v = v > 2 ? v : 2 ;
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        v = v + helper . peek ( v ) ;
        v = v + helper . shared ;
    }

    private void work1 ( int p0 ) {
        int v = f0 ;
        v = v + helper . peek ( v ) ;
        v = v + helper . shared ;
        f0 = v ;
    }

    private void work2 ( ) {
        int v = f0 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }
}
